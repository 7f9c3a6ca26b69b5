#include "cmtype/constructions.hpp"

#include "cmtype/engine.hpp"
#include "cmtype/errors.hpp"
#include "cmtype/typecalc.hpp"

#include <algorithm>

namespace cmtype {
namespace {

void require_not_dvr(const NumericalSemigroup& h, const char* what) {
  if (h.is_dvr()) throw ArgumentError(std::string(what) + " needs a semigroup other than ⟨1⟩");
}

}  // namespace

RelativeIdeal pf_family_ideal(const SemigroupPtr& h, int p) {
  require_not_dvr(*h, "pf_family_ideal");
  const auto pf = h->pseudo_frobenius();
  const int r = static_cast<int>(pf.size());
  if (p < 1 || p > r) {
    throw ArgumentError("p = " + std::to_string(p) + " outside [1, " + std::to_string(r) + "]");
  }
  const int e = h->multiplicity();
  std::vector<int> gens{e};
  for (int j = p; j <= r; ++j) gens.push_back(pf[static_cast<std::size_t>(j - 1)] + e);
  auto ideal = RelativeIdeal::from_exponents(h, gens);
  if (!(product(ideal, ideal) == ideal.shifted(e))) {
    throw ConsistencyError("I² ≠ t^e I for " + h->to_string() + ", p = " + std::to_string(p));
  }
  return ideal;
}

RelativeIdeal med_family_ideal(const SemigroupPtr& h, int p) {
  const auto inv = h->invariants();
  if (!inv.is_med || inv.is_dvr) {
    throw ArgumentError(h->to_string() + " does not have maximal embedding dimension >= 2");
  }
  const int l = inv.embedding_dimension;
  if (p < 2 || p > l) {
    throw ArgumentError("p = " + std::to_string(p) + " outside [2, " + std::to_string(l) + "]");
  }
  const auto& a = h->generators();
  std::vector<int> gens{a.front()};
  for (int j = p; j <= l; ++j) gens.push_back(a[static_cast<std::size_t>(j - 1)]);
  return RelativeIdeal::from_exponents(h, gens);
}

RelativeIdeal dual_family_ideal(const SemigroupPtr& h, int p) {
  return canonical_dual(pf_family_ideal(h, p));
}

RelativeIdeal blowup_ring(const SemigroupPtr& h) {
  if (h->is_dvr()) return RelativeIdeal::ring(h);
  const int e = h->multiplicity();
  const auto m = RelativeIdeal::maximal_ideal(h);
  auto power = m;
  // m^n stabilizes (m^(n+1) = t^e m^n) once n >= c.
  for (int n = 1; n <= h->conductor() + 1; ++n) {
    auto next = product(power, m);
    if (next == power.shifted(e)) return colon(power, power);
    power = std::move(next);
  }
  throw ConsistencyError("powers of m did not stabilize for " + h->to_string());
}

RelativeIdeal blowup_ring_closed_form(const SemigroupPtr& h) {
  if (h->is_dvr()) return RelativeIdeal::ring(h);
  const auto& a = h->generators();
  const int e = a.front();
  std::vector<int> gens{e};
  for (std::size_t i = 1; i < a.size(); ++i) gens.push_back(a[i] - e);
  const NumericalSemigroup b(gens);
  std::vector<int> members;
  for (int z = 0; z <= h->conductor(); ++z) {
    if (b.contains(z)) members.push_back(z);
  }
  return RelativeIdeal::from_exponents(h, members);
}

std::size_t enumerate_monomial_ideals(const SemigroupPtr& h, int bound,
                                      const std::function<void(const RelativeIdeal&)>& visit,
                                      std::size_t cap) {
  if (bound < 1) throw ArgumentError("enumeration bound must be >= 1");
  std::vector<int> candidates;
  for (const int g : h->gaps()) {
    if (g <= bound) candidates.push_back(g);
  }
  std::size_t count = 0;
  // Adding generators in increasing order, each outside the current ideal,
  // produces every minimal generating set exactly once.
  const std::function<void(const RelativeIdeal&, std::size_t)> walk =
      [&](const RelativeIdeal& cur, std::size_t from) {
        if (++count > cap) {
          throw ResourceError("more than " + std::to_string(cap) + " ideals below bound " +
                              std::to_string(bound) + " for " + h->to_string());
        }
        visit(cur);
        for (std::size_t i = from; i < candidates.size(); ++i) {
          if (cur.contains(candidates[i])) continue;
          walk(sum(cur, RelativeIdeal::principal(h, candidates[i])), i + 1);
        }
      };
  walk(RelativeIdeal::ring(h), 0);
  return count;
}

std::vector<RelativeIdeal> enumerate_monomial_ideals(const SemigroupPtr& h, int bound,
                                                     std::size_t cap) {
  std::vector<RelativeIdeal> out;
  enumerate_monomial_ideals(h, bound, [&](const RelativeIdeal& e) { out.push_back(e); }, cap);
  return out;
}

SupResult sup_search(const SemigroupPtr& h, int bound, std::size_t cap) {
  const MonomialEngine eng(h);
  SupResult out;
  out.searched = enumerate_monomial_ideals(
      h, bound,
      [&](const RelativeIdeal& e) {
        const int r = idealization_type(eng, e).first.type;
        if (!out.witness || r > out.value) {
          out.value = r;
          out.witness = e;
        }
      },
      cap);
  return out;
}

}  // namespace cmtype
