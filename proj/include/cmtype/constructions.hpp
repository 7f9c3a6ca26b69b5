#pragma once

// Explicit ideal families, the blow-up ring, and exhaustive enumeration of
// monomial ideals with δ = 0.

#include "cmtype/relideal.hpp"
#include "cmtype/semigroup.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace cmtype {

// (t^e) + (t^(α_j + e) : p ≤ j ≤ r), PF(H) = {α_1 < … < α_r}.  Checks
// I² = t^e I and throws ConsistencyError if it fails.
RelativeIdeal pf_family_ideal(const SemigroupPtr& h, int p);

// (t^a1) + (t^ap, …, t^aℓ) for H of maximal embedding dimension ℓ = a1 ≥ 2.
RelativeIdeal med_family_ideal(const SemigroupPtr& h, int p);

// K : pf_family_ideal(h, p)
RelativeIdeal dual_family_ideal(const SemigroupPtr& h, int p);

// ∪ m^n : m^n, by iterating until m^(n+1) = t^e m^n.
RelativeIdeal blowup_ring(const SemigroupPtr& h);
// R[m/t^e], the semigroup generated by e and a_i − e.
RelativeIdeal blowup_ring_closed_form(const SemigroupPtr& h);

inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

// Calls `visit` once for every relative ideal E with min E = 0 whose minimal
// generators lie in [0, bound].  Returns the number visited.  Throws
// ArgumentError for bound < 1 and ResourceError past `cap` ideals.
std::size_t enumerate_monomial_ideals(const SemigroupPtr& h, int bound,
                                      const std::function<void(const RelativeIdeal&)>& visit,
                                      std::size_t cap = kDefaultEnumerationCap);
std::vector<RelativeIdeal> enumerate_monomial_ideals(const SemigroupPtr& h, int bound,
                                                     std::size_t cap = kDefaultEnumerationCap);

struct SupResult {
  int value = 0;
  std::optional<RelativeIdeal> witness;
  std::size_t searched = 0;
};

// max r(R ⋉ I) over the enumeration; every δ = 0 ideal is isomorphic to an
// m-primary ideal t^N E ⊆ R, so this is the supremum over that class.
SupResult sup_search(const SemigroupPtr& h, int bound, std::size_t cap = kDefaultEnumerationCap);

}  // namespace cmtype
