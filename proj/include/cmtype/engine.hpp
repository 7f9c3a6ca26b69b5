#pragma once

// Two interchangeable ideal engines behind one interface, so the type
// formulas are written once: MonomialEngine works on exponent sets,
// SeriesEngine<Field> on coefficient windows of general fractional ideals.

#include "cmtype/fractional.hpp"
#include "cmtype/relideal.hpp"

#include <concepts>
#include <optional>
#include <string>

namespace cmtype {

template <class E>
concept IdealEngine = requires(const E& eng, const typename E::Ideal& a, int n) {
  { eng.semigroup() } -> std::same_as<const NumericalSemigroup&>;
  { eng.ring() } -> std::same_as<typename E::Ideal>;
  { eng.maximal() } -> std::same_as<typename E::Ideal>;
  { eng.canonical() } -> std::same_as<typename E::Ideal>;
  { eng.monomial(n) } -> std::same_as<typename E::Ideal>;
  { eng.sum(a, a) } -> std::same_as<typename E::Ideal>;
  { eng.product(a, a) } -> std::same_as<typename E::Ideal>;
  { eng.colon(a, a) } -> std::same_as<typename E::Ideal>;
  { eng.intersect(a, a) } -> std::same_as<typename E::Ideal>;
  { eng.mu(a) } -> std::same_as<int>;
  { eng.quotient_length(a, a) } -> std::same_as<int>;
  { eng.equals(a, a) } -> std::same_as<bool>;
  { eng.contains(a, a) } -> std::same_as<bool>;
  { eng.order(a) } -> std::same_as<int>;
  { eng.reduction(a) } -> std::same_as<std::optional<typename E::Ideal>>;
  { eng.describe(a) } -> std::same_as<std::string>;
  { E::name } -> std::convertible_to<const char*>;
};

class MonomialEngine {
 public:
  using Ideal = RelativeIdeal;
  static constexpr const char* name = "monomial";

  explicit MonomialEngine(SemigroupPtr h) : h_(std::move(h)) {}

  const NumericalSemigroup& semigroup() const { return *h_; }
  const SemigroupPtr& semigroup_ptr() const { return h_; }

  Ideal ring() const { return RelativeIdeal::ring(h_); }
  Ideal maximal() const { return RelativeIdeal::maximal_ideal(h_); }
  Ideal canonical() const { return canonical_relative_ideal(h_); }
  Ideal monomial(int a) const { return RelativeIdeal::principal(h_, a); }

  Ideal sum(const Ideal& a, const Ideal& b) const { return cmtype::sum(a, b); }
  Ideal product(const Ideal& a, const Ideal& b) const { return cmtype::product(a, b); }
  Ideal colon(const Ideal& a, const Ideal& b) const { return cmtype::colon(a, b); }
  Ideal intersect(const Ideal& a, const Ideal& b) const { return cmtype::intersect(a, b); }

  int mu(const Ideal& a) const { return a.mu(); }
  int quotient_length(const Ideal& a, const Ideal& b) const {
    return cmtype::quotient_length(a, b);
  }
  bool equals(const Ideal& a, const Ideal& b) const { return a == b; }
  // b ⊆ a
  bool contains(const Ideal& a, const Ideal& b) const { return b.is_subset_of(a); }
  int order(const Ideal& a) const { return a.min_element(); }

  // For monomial ideals I² = xI for some x iff I² = t^δ I.
  std::optional<Ideal> reduction(const Ideal& a) const {
    const auto x = monomial(a.min_element());
    if (product(a, a) == product(x, a)) return x;
    return std::nullopt;
  }
  std::string describe(const Ideal& a) const;

 private:
  SemigroupPtr h_;
};

template <CoefficientField Field>
class SeriesEngine {
 public:
  using Ideal = FractionalIdeal<Field>;
  static constexpr const char* name = "series";

  SeriesEngine(SemigroupPtr h, Field field) : h_(std::move(h)), field_(std::move(field)) {}

  const NumericalSemigroup& semigroup() const { return *h_; }
  const SemigroupPtr& semigroup_ptr() const { return h_; }
  const Field& field() const { return field_; }

  Ideal ring() const { return lift(RelativeIdeal::ring(h_)); }
  Ideal maximal() const { return lift(RelativeIdeal::maximal_ideal(h_)); }
  Ideal canonical() const { return lift(canonical_relative_ideal(h_)); }
  Ideal monomial(int a) const { return lift(RelativeIdeal::principal(h_, a)); }
  Ideal lift(const RelativeIdeal& e) const { return from_relative(e, field_); }

  Ideal sum(const Ideal& a, const Ideal& b) const { return ideal_sum(a, b); }
  Ideal product(const Ideal& a, const Ideal& b) const { return ideal_product(a, b); }
  Ideal colon(const Ideal& a, const Ideal& b) const { return ideal_colon(a, b); }
  Ideal intersect(const Ideal& a, const Ideal& b) const { return ideal_intersect(a, b); }

  int mu(const Ideal& a) const { return ideal_mu(a); }
  int quotient_length(const Ideal& a, const Ideal& b) const { return ideal_quotient_length(a, b); }
  bool equals(const Ideal& a, const Ideal& b) const { return a == b; }
  bool contains(const Ideal& a, const Ideal& b) const { return ideal_contains(a, b); }
  int order(const Ideal& a) const { return a.order(); }

  std::optional<Ideal> reduction(const Ideal& a) const {
    const auto x = find_reduction(a);
    if (!x) return std::nullopt;
    const std::vector<TruncatedSeries<Field>> one{*x};
    return ideal_from_generators<Field>(h_, field_, one);
  }
  std::string describe(const Ideal& a) const { return a.to_string(); }

 private:
  SemigroupPtr h_;
  Field field_;
};

inline std::string MonomialEngine::describe(const Ideal& a) const {
  std::string out = "(";
  const auto gens = a.minimal_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out += (i ? ", t^" : "t^") + std::to_string(gens[i]);
  }
  return out + ")";
}

static_assert(IdealEngine<MonomialEngine>);
static_assert(IdealEngine<SeriesEngine<Rationals>>);
static_assert(IdealEngine<SeriesEngine<PrimeField>>);

}  // namespace cmtype
