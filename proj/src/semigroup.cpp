#include "cmtype/semigroup.hpp"

#include "cmtype/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace cmtype {
namespace {

// Least element of <gens> in every residue class mod n (shortest paths on
// the residue graph).  Entries are long to survive large inputs.
std::vector<long> residue_minima(const std::vector<int>& gens, int n) {
  constexpr long kInf = std::numeric_limits<long>::max();
  std::vector<long> dist(static_cast<std::size_t>(n), kInf);
  using Item = std::pair<long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    const auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (const int g : gens) {
      const int s = static_cast<int>((r + g) % n);
      if (d + g < dist[static_cast<std::size_t>(s)]) {
        dist[static_cast<std::size_t>(s)] = d + g;
        queue.emplace(d + g, s);
      }
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::span<const int> generators) {
  if (generators.empty()) throw ArgumentError("a numerical semigroup needs at least one generator");
  std::vector<int> gens(generators.begin(), generators.end());
  int g = 0;
  for (const int a : gens) {
    if (a <= 0) throw ArgumentError("generators must be positive, got " + std::to_string(a));
    g = std::gcd(g, a);
  }
  if (g != 1) {
    throw ArgumentError("generators have gcd " + std::to_string(g) +
                        "; not a numerical semigroup");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  const int e = gens.front();
  const auto minima = residue_minima(gens, e);
  const long top = *std::max_element(minima.begin(), minima.end());
  if (top - e + 1 > kMaxConductor) {
    throw ResourceError("conductor " + std::to_string(top - e + 1) + " exceeds the supported limit");
  }
  frobenius_ = static_cast<int>(top - e);

  member_.assign(static_cast<std::size_t>(conductor()), 0);
  for (int z = 0; z < conductor(); ++z) {
    member_[static_cast<std::size_t>(z)] = z >= minima[static_cast<std::size_t>(z % e)];
  }

  // A generator is redundant when it splits as a sum of two nonzero members.
  for (const int a : gens) {
    bool decomposes = false;
    for (int h = 1; h <= a / 2 && !decomposes; ++h) {
      decomposes = contains(h) && contains(a - h);
    }
    if (!decomposes) gens_.push_back(a);
  }
}

std::vector<int> NumericalSemigroup::apery(int n) const {
  if (n <= 0 || !contains(n)) {
    throw ArgumentError("Apery set requires a positive member of H, got " + std::to_string(n));
  }
  std::vector<int> out(static_cast<std::size_t>(n), -1);
  int found = 0;
  for (int z = 0; found < n; ++z) {
    auto& slot = out[static_cast<std::size_t>(z % n)];
    if (slot < 0 && contains(z)) {
      slot = z;
      ++found;
    }
  }
  return out;
}

std::vector<int> NumericalSemigroup::gaps() const {
  std::vector<int> out;
  for (int z = 0; z < conductor(); ++z) {
    if (!contains(z)) out.push_back(z);
  }
  return out;
}

std::vector<int> NumericalSemigroup::pseudo_frobenius() const {
  // x + a ∈ H for each minimal generator a already forces x + h ∈ H for all
  // nonzero h.  For H = Z>=0 the only candidate is -1.
  std::vector<int> out;
  for (int x = -1; x < conductor(); ++x) {
    if (contains(x)) continue;
    const bool absorbs =
        std::all_of(gens_.begin(), gens_.end(), [&](int a) { return contains(x + a); });
    if (absorbs) out.push_back(x);
  }
  return out;
}

bool NumericalSemigroup::is_symmetric() const {
  for (int z = 0; z <= frobenius_; ++z) {
    if (contains(z) == contains(frobenius_ - z)) return false;
  }
  return true;
}

SemigroupInvariants NumericalSemigroup::invariants() const {
  SemigroupInvariants inv;
  inv.multiplicity = multiplicity();
  inv.embedding_dimension = embedding_dimension();
  inv.frobenius = frobenius();
  inv.conductor = conductor();
  inv.type = type();
  inv.is_symmetric = is_symmetric();
  inv.is_med = embedding_dimension() == multiplicity();
  inv.is_dvr = is_dvr();
  if (inv.is_symmetric != (inv.type == 1)) {
    throw ConsistencyError("symmetry scan and pseudo-Frobenius count disagree for " + to_string());
  }
  return inv;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
  os << '>';
  return os.str();
}

SemigroupPtr make_semigroup(std::span<const int> generators) {
  return std::make_shared<const NumericalSemigroup>(generators);
}

SemigroupPtr make_semigroup(std::initializer_list<int> generators) {
  return std::make_shared<const NumericalSemigroup>(generators);
}

}  // namespace cmtype
