#pragma once

// Relative ideals of a numerical semigroup: sets E ⊆ Z, bounded below, with
// E + H ⊆ E.  These are the exponent sets of monomial fractional ideals of
// k[[t^H]], and every ideal-theoretic operation on such ideals is exact set
// combinatorics on them.
//
// Representation: the minimum δ plus a bit window over [δ, δ + c), c the
// conductor of H.  Every integer >= δ + c is a member (δ + (c + n) ∈ δ + H),
// so (δ, window) is a canonical form and equality is representation equality.

#include "cmtype/semigroup.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cmtype {

class RelativeIdeal {
 public:
  // E = ∪_g (g + H).  Throws ArgumentError on an empty generator set.
  static RelativeIdeal from_exponents(SemigroupPtr h, std::span<const int> gens);
  static RelativeIdeal from_exponents(SemigroupPtr h, std::initializer_list<int> gens) {
    return from_exponents(std::move(h), std::span<const int>(gens.begin(), gens.size()));
  }
  static RelativeIdeal ring(SemigroupPtr h) { return from_exponents(std::move(h), {0}); }
  static RelativeIdeal maximal_ideal(SemigroupPtr h);
  static RelativeIdeal principal(SemigroupPtr h, int exponent) {
    return from_exponents(std::move(h), {exponent});
  }

  const NumericalSemigroup& semigroup() const { return *h_; }
  const SemigroupPtr& semigroup_ptr() const { return h_; }

  int min_element() const { return delta_; }
  bool contains(long z) const;

  // Members of E below δ + c, increasing.
  std::vector<int> window_members() const;
  // E \ (E + (H \ {0})), increasing; all lie in [δ, δ + c].
  std::vector<int> minimal_generators() const;
  int mu() const { return static_cast<int>(minimal_generators().size()); }

  RelativeIdeal shifted(int s) const;
  bool is_subset_of(const RelativeIdeal& other) const;

  // Throws ConsistencyError if the H-stability invariant fails.
  void check_invariants() const;

  // e.g. "{3,4} ∪ [6,∞)"
  std::string to_string() const;

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
    return *a.h_ == *b.h_ && a.delta_ == b.delta_ && a.bits_ == b.bits_;
  }

 private:
  RelativeIdeal(SemigroupPtr h, int delta, std::vector<std::uint64_t> bits)
      : h_(std::move(h)), delta_(delta), bits_(std::move(bits)) {}

  // Bits j ∈ [0, width) answer contains(start + j).
  std::vector<std::uint64_t> extract(long start, int width) const;
  // Canonical ideal from a window over [start, start + c) whose tail beyond
  // start + c is known to be full.
  static RelativeIdeal normalize(SemigroupPtr h, long start, std::vector<std::uint64_t> window);

  friend RelativeIdeal sum(const RelativeIdeal&, const RelativeIdeal&);
  friend RelativeIdeal product(const RelativeIdeal&, const RelativeIdeal&);
  friend RelativeIdeal colon(const RelativeIdeal&, const RelativeIdeal&);
  friend RelativeIdeal intersect(const RelativeIdeal&, const RelativeIdeal&);
  friend int quotient_length(const RelativeIdeal&, const RelativeIdeal&);

  SemigroupPtr h_;
  int delta_ = 0;
  std::vector<std::uint64_t> bits_;
};

// All binary operations throw ArgumentError when the semigroups differ.
RelativeIdeal sum(const RelativeIdeal& a, const RelativeIdeal& b);
// Minkowski sum a + b.
RelativeIdeal product(const RelativeIdeal& a, const RelativeIdeal& b);
// a − b = { z : z + b ⊆ a }.
RelativeIdeal colon(const RelativeIdeal& a, const RelativeIdeal& b);
RelativeIdeal intersect(const RelativeIdeal& a, const RelativeIdeal& b);
// |a \ b|; requires b ⊆ a (ContainmentError otherwise).
int quotient_length(const RelativeIdeal& a, const RelativeIdeal& b);

// K = { x : F − x ∉ H }, the standard canonical ideal with H ⊆ K ⊆ Z>=0.
RelativeIdeal canonical_relative_ideal(const SemigroupPtr& h);
// K − E.
RelativeIdeal canonical_dual(const RelativeIdeal& e);

}  // namespace cmtype
