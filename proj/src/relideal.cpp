#include "cmtype/relideal.hpp"

#include "cmtype/errors.hpp"
#include "cmtype/kernels.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cmtype {
namespace {

using Words = std::vector<std::uint64_t>;

std::size_t word_count(int width) { return static_cast<std::size_t>((width + 63) / 64); }

bool test_bit(const Words& w, int i) {
  return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
}

void set_bit(Words& w, int i) { w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }

int first_set(const Words& w, int width) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] != 0) {
      const int i = static_cast<int>(k * 64) + std::countr_zero(w[k]);
      return i < width ? i : width;
    }
  }
  return width;
}

void require_same_semigroup(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (!(a.semigroup() == b.semigroup())) {
    throw ArgumentError("relative ideals over different semigroups " + a.semigroup().to_string() +
                        " and " + b.semigroup().to_string());
  }
}

}  // namespace

RelativeIdeal RelativeIdeal::from_exponents(SemigroupPtr h, std::span<const int> gens) {
  if (gens.empty()) throw ArgumentError("a relative ideal needs at least one generator");
  const int c = h->conductor();
  const int delta = *std::min_element(gens.begin(), gens.end());
  Words bits(word_count(c), 0);
  for (const int g : gens) {
    for (int j = g - delta; j < c; ++j) {
      if (h->contains(j - (g - delta))) set_bit(bits, j);
    }
  }
  return RelativeIdeal(std::move(h), delta, std::move(bits));
}

RelativeIdeal RelativeIdeal::maximal_ideal(SemigroupPtr h) {
  const auto gens = h->generators();
  return from_exponents(std::move(h), std::span<const int>(gens));
}

bool RelativeIdeal::contains(long z) const {
  if (z < delta_) return false;
  if (z >= delta_ + static_cast<long>(h_->conductor())) return true;
  return test_bit(bits_, static_cast<int>(z - delta_));
}

Words RelativeIdeal::extract(long start, int width) const {
  Words out(word_count(width), 0);
  for (int j = 0; j < width; ++j) {
    if (contains(start + j)) set_bit(out, j);
  }
  return out;
}

RelativeIdeal RelativeIdeal::normalize(SemigroupPtr h, long start, Words window) {
  const int c = h->conductor();
  const int lead = first_set(window, c);
  const long delta = start + lead;
  if (lead != 0) {
    Words shifted(word_count(c), 0);
    for (int j = 0; j + lead < c; ++j) {
      if (test_bit(window, j + lead)) set_bit(shifted, j);
    }
    for (int j = std::max(0, c - lead); j < c; ++j) set_bit(shifted, j);
    window = std::move(shifted);
  }
  return RelativeIdeal(std::move(h), static_cast<int>(delta), std::move(window));
}

std::vector<int> RelativeIdeal::window_members() const {
  std::vector<int> out;
  for (int j = 0; j < h_->conductor(); ++j) {
    if (test_bit(bits_, j)) out.push_back(delta_ + j);
  }
  return out;
}

std::vector<int> RelativeIdeal::minimal_generators() const {
  std::vector<int> out;
  const auto& gens = h_->generators();
  for (int x = delta_; x <= delta_ + h_->conductor(); ++x) {
    if (!contains(x)) continue;
    const bool reducible =
        std::any_of(gens.begin(), gens.end(), [&](int a) { return contains(x - a); });
    if (!reducible) out.push_back(x);
  }
  return out;
}

RelativeIdeal RelativeIdeal::shifted(int s) const { return RelativeIdeal(h_, delta_ + s, bits_); }

bool RelativeIdeal::is_subset_of(const RelativeIdeal& other) const {
  require_same_semigroup(*this, other);
  if (delta_ < other.delta_) return false;
  const int width = delta_ - other.delta_ + h_->conductor();
  const auto mine = extract(other.delta_, width);
  const auto theirs = other.extract(other.delta_, width);
  return kernels::subset_words(mine, theirs);
}

void RelativeIdeal::check_invariants() const {
  const int c = h_->conductor();
  if (c > 0 && !test_bit(bits_, 0)) throw ConsistencyError("relative ideal window misses its minimum");
  if (c % 64 != 0 && !bits_.empty() && (bits_.back() >> (c % 64)) != 0) {
    throw ConsistencyError("relative ideal has stray bits past the window");
  }
  for (const int x : window_members()) {
    for (const int a : h_->generators()) {
      if (!contains(x + a)) {
        throw ConsistencyError("relative ideal not H-stable: " + std::to_string(x) + " + " +
                               std::to_string(a));
      }
    }
  }
}

std::string RelativeIdeal::to_string() const {
  std::ostringstream os;
  // Members below the start of the final run of consecutive integers.
  long tail = delta_ + h_->conductor();
  while (tail - 1 >= delta_ && contains(tail - 1)) --tail;
  os << '{';
  bool first = true;
  for (long x = delta_; x < tail; ++x) {
    if (!contains(x)) continue;
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << '}';
  os << (first ? "" : " ∪ ") << '[' << tail << ",∞)";
  return os.str();
}

RelativeIdeal sum(const RelativeIdeal& a, const RelativeIdeal& b) {
  require_same_semigroup(a, b);
  const int c = a.h_->conductor();
  const long start = std::min(a.delta_, b.delta_);
  auto w = a.extract(start, c);
  kernels::or_words(w, b.extract(start, c));
  return RelativeIdeal::normalize(a.h_, start, std::move(w));
}

RelativeIdeal product(const RelativeIdeal& a, const RelativeIdeal& b) {
  require_same_semigroup(a, b);
  const int c = a.h_->conductor();
  // a + b = ∪_{g ∈ mingens(b)} (g + a)
  const long start = static_cast<long>(a.delta_) + b.delta_;
  Words w(word_count(c), 0);
  for (const int g : b.minimal_generators()) {
    kernels::or_words(w, a.extract(start - g, c));
  }
  return RelativeIdeal::normalize(a.h_, start, std::move(w));
}

RelativeIdeal colon(const RelativeIdeal& a, const RelativeIdeal& b) {
  require_same_semigroup(a, b);
  const int c = a.h_->conductor();
  // z + δ_b ∈ a forces z >= δ_a − δ_b; z >= δ_a − δ_b + c puts all of z + b
  // inside the full tail of a.  So the window at δ_a − δ_b decides everything.
  const long start = static_cast<long>(a.delta_) - b.delta_;
  const auto gens = b.minimal_generators();
  Words w(word_count(c), ~std::uint64_t{0});
  for (const int g : gens) kernels::and_words(w, a.extract(start + g, c));
  if (c % 64 != 0) w.back() &= (std::uint64_t{1} << (c % 64)) - 1;
  return RelativeIdeal::normalize(a.h_, start, std::move(w));
}

RelativeIdeal intersect(const RelativeIdeal& a, const RelativeIdeal& b) {
  require_same_semigroup(a, b);
  const int c = a.h_->conductor();
  const long start = std::max(a.delta_, b.delta_);
  auto w = a.extract(start, c);
  kernels::and_words(w, b.extract(start, c));
  return RelativeIdeal::normalize(a.h_, start, std::move(w));
}

int quotient_length(const RelativeIdeal& a, const RelativeIdeal& b) {
  require_same_semigroup(a, b);
  const long start = std::min(a.delta_, b.delta_);
  const int width = std::abs(a.delta_ - b.delta_) + a.h_->conductor();
  const auto wa = a.extract(start, width);
  const auto wb = b.extract(start, width);
  if (!kernels::subset_words(wb, wa)) {
    throw ContainmentError("quotient length requested for " + b.to_string() + " ⊄ " + a.to_string());
  }
  int n = 0;
  for (std::size_t k = 0; k < wa.size(); ++k) n += std::popcount(wa[k] & ~wb[k]);
  return n;
}

RelativeIdeal canonical_relative_ideal(const SemigroupPtr& h) {
  const int f = h->frobenius();
  std::vector<int> members;
  for (int x = 0; x <= h->conductor(); ++x) {
    if (!h->contains(f - x)) members.push_back(x);
  }
  auto k = RelativeIdeal::from_exponents(h, members);
  return k;
}

RelativeIdeal canonical_dual(const RelativeIdeal& e) {
  return colon(canonical_relative_ideal(e.semigroup_ptr()), e);
}

}  // namespace cmtype
