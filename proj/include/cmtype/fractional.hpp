#pragma once

// General fractional ideals of R = k[[t^H]] inside k((t)), not necessarily
// monomial.
//
// An ideal I whose smallest order is δ always contains t^(δ+c) k[[t]]: an
// element of order δ is t^δ·(unit), and t^c k[[t]] ⊆ R.  So I is exactly
//
//     span(basis rows) + t^(δ+c) k[[t]]
//
// where the basis is the reduced row-echelon form of I mod t^(δ+c) on the
// exponent window [δ, δ+c).  The (δ, basis) pair is canonical, and every
// operation below is exact linear algebra on windows.

#include "cmtype/matrix.hpp"
#include "cmtype/relideal.hpp"
#include "cmtype/semigroup.hpp"
#include "cmtype/series.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cmtype {

template <CoefficientField Field>
class FractionalIdeal {
 public:
  using Elem = typename Field::Elem;
  using Series = TruncatedSeries<Field>;
  using Matrix = CoeffMatrix<Field>;
  using Row = typename Matrix::Row;

  // I = span(rows) + t^top k[[t]], rows given on the window [base, top).
  // The caller guarantees t^top k[[t]] ⊆ I is R-stable together with rows.
  static FractionalIdeal from_window(SemigroupPtr h, Field field, int base, int top,
                                     std::vector<Row> rows, std::vector<Series> generators = {});

  const NumericalSemigroup& semigroup() const { return *h_; }
  const SemigroupPtr& semigroup_ptr() const { return h_; }
  const Field& field() const { return basis_.field(); }

  // δ: least order of an element.
  int order() const { return delta_; }
  // γ = δ + c: t^γ k[[t]] ⊆ I.
  int top() const { return delta_ + h_->conductor(); }
  const Matrix& basis() const { return basis_; }
  int window_dimension() const { return static_cast<int>(basis_.size()); }

  // R-module generators when known (construction inputs, products of those);
  // empty for ideals produced by colon, sum or intersection.
  const std::vector<Series>& generators() const { return gens_; }

  // Basis row i as an exact polynomial (an element of I).
  Series basis_element(std::size_t i) const;
  // Orders of elements of I, i.e. the value set; a relative ideal.
  RelativeIdeal value_set() const;
  bool is_monomial() const;
  bool contains(const Series& x) const;

  // Throws ConsistencyError if the basis is not reduced or not R-stable.
  void check_invariants() const;
  std::string to_string() const;

  friend bool operator==(const FractionalIdeal& a, const FractionalIdeal& b) {
    return *a.h_ == *b.h_ && a.delta_ == b.delta_ && a.basis_ == b.basis_;
  }

 private:
  FractionalIdeal(SemigroupPtr h, int delta, Matrix basis, std::vector<Series> gens)
      : h_(std::move(h)), delta_(delta), basis_(std::move(basis)), gens_(std::move(gens)) {}

  SemigroupPtr h_;
  int delta_;
  Matrix basis_;
  std::vector<Series> gens_;
};

// Σ R g_i.  The window is built with `slack` extra columns (default: the
// multiplicity) and the tail t^(δ+c) k[[t]] ⊆ I is certified on them before
// the result is normalized.  Throws ArgumentError if every generator is
// zero, PrecisionError if a truncated generator is not known far enough.
template <CoefficientField Field>
FractionalIdeal<Field> ideal_from_generators(SemigroupPtr h, const Field& field,
                                             std::span<const TruncatedSeries<Field>> gens,
                                             std::optional<int> slack = std::nullopt);

template <CoefficientField Field>
FractionalIdeal<Field> from_relative(const RelativeIdeal& e, const Field& field);

template <CoefficientField Field>
FractionalIdeal<Field> ideal_sum(const FractionalIdeal<Field>& a, const FractionalIdeal<Field>& b);
template <CoefficientField Field>
FractionalIdeal<Field> ideal_product(const FractionalIdeal<Field>& a,
                                     const FractionalIdeal<Field>& b);
// a : b = { x : x·b ⊆ a }
template <CoefficientField Field>
FractionalIdeal<Field> ideal_colon(const FractionalIdeal<Field>& a,
                                   const FractionalIdeal<Field>& b);
template <CoefficientField Field>
FractionalIdeal<Field> ideal_intersect(const FractionalIdeal<Field>& a,
                                       const FractionalIdeal<Field>& b);

// b ⊆ a
template <CoefficientField Field>
bool ideal_contains(const FractionalIdeal<Field>& a, const FractionalIdeal<Field>& b);
// ℓ_R(a/b); throws ContainmentError unless b ⊆ a.
template <CoefficientField Field>
int ideal_quotient_length(const FractionalIdeal<Field>& a, const FractionalIdeal<Field>& b);
template <CoefficientField Field>
int ideal_mu(const FractionalIdeal<Field>& a);
template <CoefficientField Field>
bool ideal_equals(const FractionalIdeal<Field>& a, const FractionalIdeal<Field>& b) {
  return a == b;
}
template <CoefficientField Field>
bool is_principal(const FractionalIdeal<Field>& a) {
  return ideal_mu(a) == 1;
}

// Some x ∈ I of order δ with I² = x·I, trying in turn the given generators
// of order δ, the basis row of order δ, and t^δ itself.
template <CoefficientField Field>
std::optional<TruncatedSeries<Field>> find_reduction(const FractionalIdeal<Field>& a);

#define CMTYPE_FRACTIONAL_EXTERN(F)                                                              \
  extern template class FractionalIdeal<F>;                                                      \
  extern template FractionalIdeal<F> ideal_from_generators(                                      \
      SemigroupPtr, const F&, std::span<const TruncatedSeries<F>>, std::optional<int>);          \
  extern template FractionalIdeal<F> from_relative(const RelativeIdeal&, const F&);              \
  extern template FractionalIdeal<F> ideal_sum(const FractionalIdeal<F>&,                        \
                                               const FractionalIdeal<F>&);                       \
  extern template FractionalIdeal<F> ideal_product(const FractionalIdeal<F>&,                    \
                                                   const FractionalIdeal<F>&);                   \
  extern template FractionalIdeal<F> ideal_colon(const FractionalIdeal<F>&,                      \
                                                 const FractionalIdeal<F>&);                     \
  extern template FractionalIdeal<F> ideal_intersect(const FractionalIdeal<F>&,                  \
                                                     const FractionalIdeal<F>&);                 \
  extern template bool ideal_contains(const FractionalIdeal<F>&, const FractionalIdeal<F>&);     \
  extern template int ideal_quotient_length(const FractionalIdeal<F>&,                           \
                                            const FractionalIdeal<F>&);                          \
  extern template int ideal_mu(const FractionalIdeal<F>&);                                       \
  extern template std::optional<TruncatedSeries<F>> find_reduction(const FractionalIdeal<F>&);

CMTYPE_FRACTIONAL_EXTERN(Rationals)
CMTYPE_FRACTIONAL_EXTERN(PrimeField)

}  // namespace cmtype

namespace cmtype {

// Ideal generated by a comma-separated list of generator expressions.
template <CoefficientField Field>
FractionalIdeal<Field> parse_ideal(SemigroupPtr h, const Field& field, std::string_view text) {
  std::vector<TruncatedSeries<Field>> gens;
  for (const auto& expr : parse_expression_list(text)) gens.push_back(to_series(expr, field));
  return ideal_from_generators<Field>(std::move(h), field, gens);
}

}  // namespace cmtype
