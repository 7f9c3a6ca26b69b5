#include "cmtype/fractional.hpp"

#include <algorithm>
#include <sstream>

namespace cmtype {
namespace {

template <CoefficientField Field>
void require_compatible(const FractionalIdeal<Field>& a, const FractionalIdeal<Field>& b) {
  if (!(a.semigroup() == b.semigroup())) {
    throw ArgumentError("fractional ideals over different semigroups " +
                        a.semigroup().to_string() + " and " + b.semigroup().to_string());
  }
  if (!(a.field() == b.field())) {
    throw FieldError("fractional ideals over different fields " + a.field().spec().to_string() +
                     " and " + b.field().spec().to_string());
  }
}

// Accumulates (t^shift · s) into a window row over [base, base + width).
// Terms below base must not occur.
template <CoefficientField Field>
void accumulate(typename CoeffMatrix<Field>::Row& row, const TruncatedSeries<Field>& s, int shift,
                int base, const Field& f) {
  const int width = static_cast<int>(row.size());
  for (const auto& [e, c] : s.terms()) {
    const int col = e + shift - base;
    if (col >= width) break;
    if (col < 0) throw ConsistencyError("series term below the window base");
    row[static_cast<std::size_t>(col)] = f.add(row[static_cast<std::size_t>(col)], c);
  }
}

// Ideal rows re-expressed on [base, top): shifted basis rows plus the forced
// tail units on [γ, top).  Requires base <= δ.
template <CoefficientField Field>
std::vector<typename CoeffMatrix<Field>::Row> rows_on(const FractionalIdeal<Field>& a, int base,
                                                      int top) {
  const Field& f = a.field();
  const int width = top - base;
  std::vector<typename CoeffMatrix<Field>::Row> out;
  const int offset = a.order() - base;
  for (const auto& r : a.basis().rows()) {
    typename CoeffMatrix<Field>::Row w(static_cast<std::size_t>(width), f.zero());
    for (std::size_t j = 0; j < r.size() && offset + static_cast<int>(j) < width; ++j) {
      w[static_cast<std::size_t>(offset) + j] = r[j];
    }
    out.push_back(std::move(w));
  }
  for (int e = std::max(a.top(), base); e < top; ++e) {
    typename CoeffMatrix<Field>::Row w(static_cast<std::size_t>(width), f.zero());
    w[static_cast<std::size_t>(e - base)] = f.one();
    out.push_back(std::move(w));
  }
  return out;
}

// Elements whose R-span is the ideal: stored generators, else basis rows.
template <CoefficientField Field>
std::vector<TruncatedSeries<Field>> spanning_elements(const FractionalIdeal<Field>& a) {
  if (!a.generators().empty()) return a.generators();
  std::vector<TruncatedSeries<Field>> out;
  for (std::size_t i = 0; i < a.basis().size(); ++i) out.push_back(a.basis_element(i));
  if (out.empty()) out.push_back(TruncatedSeries<Field>::monomial(a.field(), a.order()));
  return out;
}

}  // namespace

template <CoefficientField Field>
FractionalIdeal<Field> FractionalIdeal<Field>::from_window(SemigroupPtr h, Field field, int base,
                                                           int top, std::vector<Row> rows,
                                                           std::vector<Series> generators) {
  const int c = h->conductor();
  const auto reduced = reduce_echelon(Matrix(field, static_cast<std::size_t>(top - base), std::move(rows)));
  const int delta = reduced.empty() ? top : base + static_cast<int>(*reduced.leading_column(0));

  Matrix window(field, static_cast<std::size_t>(c));
  for (const auto& r : reduced.rows()) {
    Row w = window.zero_row();
    for (int j = 0; j < c && delta + j < top; ++j) {
      w[static_cast<std::size_t>(j)] = r[static_cast<std::size_t>(delta + j - base)];
    }
    window.add_row(std::move(w));
  }
  for (int e = std::max(top, delta); e < delta + c; ++e) {
    window.add_row(window.unit_row(static_cast<std::size_t>(e - delta)));
  }
  return FractionalIdeal(std::move(h), delta, reduce_echelon(window), std::move(generators));
}

template <CoefficientField Field>
TruncatedSeries<Field> FractionalIdeal<Field>::basis_element(std::size_t i) const {
  Series s(field());
  const auto& r = basis_.row(i);
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (!field().is_zero(r[j])) s.add_term(delta_ + static_cast<int>(j), r[j]);
  }
  return s;
}

template <CoefficientField Field>
RelativeIdeal FractionalIdeal<Field>::value_set() const {
  std::vector<int> orders{delta_};
  for (const auto p : basis_.pivots()) orders.push_back(delta_ + static_cast<int>(p));
  return RelativeIdeal::from_exponents(h_, orders);
}

template <CoefficientField Field>
bool FractionalIdeal<Field>::is_monomial() const {
  return std::all_of(basis_.rows().begin(), basis_.rows().end(), [&](const Row& r) {
    return std::count_if(r.begin(), r.end(), [&](const Elem& x) { return !field().is_zero(x); }) == 1;
  });
}

template <CoefficientField Field>
bool FractionalIdeal<Field>::contains(const Series& x) const {
  if (x.is_zero()) return true;
  if (*x.order() < delta_) return false;
  if (x.precision() && *x.precision() < top()) {
    throw PrecisionError("element known only mod t^" + std::to_string(*x.precision()) +
                         ", membership needs t^" + std::to_string(top()));
  }
  Row w = basis_.zero_row();
  accumulate(w, x, 0, delta_, field());
  return member<Field>(w, basis_).member;
}

template <CoefficientField Field>
void FractionalIdeal<Field>::check_invariants() const {
  if (!basis_.is_reduced()) throw ConsistencyError("ideal basis not in reduced form");
  if (h_->conductor() > 0 && (basis_.empty() || *basis_.leading_column(0) != 0)) {
    throw ConsistencyError("ideal basis has no element of the recorded order");
  }
  for (const auto& r : basis_.rows()) {
    for (const int a : h_->generators()) {
      Row w = basis_.zero_row();
      for (std::size_t j = 0; j + static_cast<std::size_t>(a) < r.size(); ++j) w[j + a] = r[j];
      if (!member<Field>(w, basis_).member) {
        throw ConsistencyError("ideal basis not stable under t^" + std::to_string(a));
      }
    }
  }
  const auto values = value_set();
  std::vector<int> pivots;
  for (const auto p : basis_.pivots()) pivots.push_back(delta_ + static_cast<int>(p));
  if (values.window_members() != pivots) throw ConsistencyError("value set is not H-stable");
}

template <CoefficientField Field>
std::string FractionalIdeal<Field>::to_string() const {
  std::ostringstream os;
  if (!gens_.empty()) {
    os << '(';
    for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
    os << ')';
  } else {
    os << "ideal with values " << value_set().to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------

template <CoefficientField Field>
FractionalIdeal<Field> ideal_from_generators(SemigroupPtr h, const Field& field,
                                             std::span<const TruncatedSeries<Field>> gens,
                                             std::optional<int> slack) {
  using Ideal = FractionalIdeal<Field>;
  std::vector<TruncatedSeries<Field>> nonzero;
  for (const auto& g : gens) {
    if (!(g.field() == field)) throw FieldError("generator over a different field");
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) throw ArgumentError("an ideal needs at least one nonzero generator");

  const int c = h->conductor();
  int delta = *nonzero.front().order();
  for (const auto& g : nonzero) delta = std::min(delta, *g.order());
  const int s = slack.value_or(h->multiplicity());
  if (s < 0) throw ArgumentError("window slack must be non-negative");
  const int top = delta + c + s;

  CoeffMatrix<Field> span(field, static_cast<std::size_t>(top - delta));
  for (const auto& g : nonzero) {
    const int ord = *g.order();
    for (int e = 0; ord + e < top; ++e) {
      if (!h->contains(e)) continue;
      if (g.precision() && *g.precision() + e < top) {
        throw PrecisionError("generator " + g.to_string() + " is not known far enough for t^" +
                             std::to_string(top));
      }
      auto row = span.zero_row();
      accumulate(row, g, e, delta, field);
      span.add_row(std::move(row));
    }
  }
  const auto reduced = reduce_echelon(span);
  for (int e = delta + c; e < top; ++e) {
    if (!member<Field>(reduced.unit_row(static_cast<std::size_t>(e - delta)), reduced).member) {
      throw ConsistencyError("tail certification failed: t^" + std::to_string(e) +
                             " not in the ideal window");
    }
  }
  return Ideal::from_window(std::move(h), field, delta, top, reduced.rows(), std::move(nonzero));
}

template <CoefficientField Field>
FractionalIdeal<Field> from_relative(const RelativeIdeal& e, const Field& field) {
  using Ideal = FractionalIdeal<Field>;
  const int delta = e.min_element();
  const int c = e.semigroup().conductor();
  CoeffMatrix<Field> rows(field, static_cast<std::size_t>(c));
  for (const int x : e.window_members()) rows.add_row(rows.unit_row(static_cast<std::size_t>(x - delta)));
  std::vector<TruncatedSeries<Field>> gens;
  for (const int g : e.minimal_generators()) gens.push_back(TruncatedSeries<Field>::monomial(field, g));
  return Ideal::from_window(e.semigroup_ptr(), field, delta, delta + c, rows.rows(), std::move(gens));
}

template <CoefficientField Field>
FractionalIdeal<Field> ideal_sum(const FractionalIdeal<Field>& a, const FractionalIdeal<Field>& b) {
  require_compatible(a, b);
  const int base = std::min(a.order(), b.order());
  const int top = std::max(a.top(), b.top());
  auto rows = rows_on(a, base, top);
  auto more = rows_on(b, base, top);
  rows.insert(rows.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  std::vector<TruncatedSeries<Field>> gens;
  if (!a.generators().empty() && !b.generators().empty()) {
    gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  }
  return FractionalIdeal<Field>::from_window(a.semigroup_ptr(), a.field(), base, top,
                                             std::move(rows), std::move(gens));
}

template <CoefficientField Field>
FractionalIdeal<Field> ideal_product(const FractionalIdeal<Field>& a,
                                     const FractionalIdeal<Field>& b) {
  require_compatible(a, b);
  const Field& f = a.field();
  const int c = a.semigroup().conductor();
  const int base = a.order() + b.order();
  // I·J = Σ_g I·g over R-generators g of J; the tails of either factor only
  // contribute at orders >= base + c.
  const bool use_b_gens = !b.generators().empty() || a.generators().empty();
  const auto& full = use_b_gens ? a : b;
  const auto multipliers = spanning_elements(use_b_gens ? b : a);
  std::vector<typename CoeffMatrix<Field>::Row> rows;
  for (std::size_t i = 0; i < full.basis().size(); ++i) {
    const auto x = full.basis_element(i);
    for (const auto& g : multipliers) {
      typename CoeffMatrix<Field>::Row row(static_cast<std::size_t>(c), f.zero());
      accumulate(row, series_mul(x, g), 0, base, f);
      rows.push_back(std::move(row));
    }
  }
  std::vector<TruncatedSeries<Field>> gens;
  if (!a.generators().empty() && !b.generators().empty()) {
    for (const auto& x : a.generators()) {
      for (const auto& y : b.generators()) gens.push_back(series_mul(x, y));
    }
  }
  return FractionalIdeal<Field>::from_window(a.semigroup_ptr(), f, base, base + c, std::move(rows),
                                             std::move(gens));
}

template <CoefficientField Field>
FractionalIdeal<Field> ideal_colon(const FractionalIdeal<Field>& a,
                                   const FractionalIdeal<Field>& b) {
  require_compatible(a, b);
  const Field& f = a.field();
  const int c = a.semigroup().conductor();
  // ord(x) >= δa − δb, and every x of order >= δa − δb + c qualifies.
  const int base = a.order() - b.order();
  const auto multipliers = spanning_elements(b);
  const std::size_t block = static_cast<std::size_t>(c);
  CoeffMatrix<Field> constraints(f, multipliers.size() * block);
  for (int z = 0; z < c; ++z) {
    auto row = constraints.zero_row();
    for (std::size_t k = 0; k < multipliers.size(); ++k) {
      typename CoeffMatrix<Field>::Row image(block, f.zero());
      accumulate(image, multipliers[k], base + z, a.order(), f);
      const auto res = residual<Field>(image, a.basis());
      std::copy(res.begin(), res.end(), row.begin() + static_cast<std::ptrdiff_t>(k * block));
    }
    constraints.add_row(std::move(row));
  }
  const auto solutions = left_kernel(constraints);
  return FractionalIdeal<Field>::from_window(a.semigroup_ptr(), f, base, base + c,
                                             solutions.rows());
}

template <CoefficientField Field>
FractionalIdeal<Field> ideal_intersect(const FractionalIdeal<Field>& a,
                                       const FractionalIdeal<Field>& b) {
  require_compatible(a, b);
  const Field& f = a.field();
  const int base = std::min(a.order(), b.order());
  const int top = std::max(a.top(), b.top());
  const auto width = static_cast<std::size_t>(top - base);
  const auto common = intersect(CoeffMatrix<Field>(f, width, rows_on(a, base, top)),
                                CoeffMatrix<Field>(f, width, rows_on(b, base, top)));
  return FractionalIdeal<Field>::from_window(a.semigroup_ptr(), f, base, top, common.rows());
}

template <CoefficientField Field>
bool ideal_contains(const FractionalIdeal<Field>& a, const FractionalIdeal<Field>& b) {
  require_compatible(a, b);
  if (b.order() < a.order()) return false;
  const auto rows = rows_on(b, a.order(), a.top());
  return std::all_of(rows.begin(), rows.end(),
                     [&](const auto& r) { return member<Field>(r, a.basis()).member; });
}

template <CoefficientField Field>
int ideal_quotient_length(const FractionalIdeal<Field>& a, const FractionalIdeal<Field>& b) {
  if (!ideal_contains(a, b)) {
    throw ContainmentError("quotient length requested for " + b.to_string() + " ⊄ " + a.to_string());
  }
  // Both windows have width c; compare dimensions mod t^(δb + c).
  return a.window_dimension() - b.window_dimension() + (b.order() - a.order());
}

template <CoefficientField Field>
int ideal_mu(const FractionalIdeal<Field>& a) {
  const auto m = from_relative(RelativeIdeal::maximal_ideal(a.semigroup_ptr()), a.field());
  return ideal_quotient_length(a, ideal_product(m, a));
}

template <CoefficientField Field>
std::optional<TruncatedSeries<Field>> find_reduction(const FractionalIdeal<Field>& a) {
  using Series = TruncatedSeries<Field>;
  std::vector<Series> candidates;
  for (const auto& g : a.generators()) {
    if (g.is_exact() && g.order() == a.order()) candidates.push_back(g);
  }
  if (!a.basis().empty()) candidates.push_back(a.basis_element(0));
  const auto monomial = Series::monomial(a.field(), a.order());
  if (a.contains(monomial)) candidates.push_back(monomial);

  const auto square = ideal_product(a, a);
  for (const auto& x : candidates) {
    const std::vector<Series> one{x};
    const auto principal = ideal_from_generators<Field>(a.semigroup_ptr(), a.field(), one);
    if (ideal_product(principal, a) == square) return x;
  }
  return std::nullopt;
}

#define CMTYPE_FRACTIONAL_INSTANTIATE(F)                                                         \
  template class FractionalIdeal<F>;                                                             \
  template FractionalIdeal<F> ideal_from_generators(SemigroupPtr, const F&,                      \
                                                    std::span<const TruncatedSeries<F>>,         \
                                                    std::optional<int>);                         \
  template FractionalIdeal<F> from_relative(const RelativeIdeal&, const F&);                     \
  template FractionalIdeal<F> ideal_sum(const FractionalIdeal<F>&, const FractionalIdeal<F>&);   \
  template FractionalIdeal<F> ideal_product(const FractionalIdeal<F>&,                           \
                                            const FractionalIdeal<F>&);                          \
  template FractionalIdeal<F> ideal_colon(const FractionalIdeal<F>&, const FractionalIdeal<F>&); \
  template FractionalIdeal<F> ideal_intersect(const FractionalIdeal<F>&,                         \
                                              const FractionalIdeal<F>&);                        \
  template bool ideal_contains(const FractionalIdeal<F>&, const FractionalIdeal<F>&);            \
  template int ideal_quotient_length(const FractionalIdeal<F>&, const FractionalIdeal<F>&);      \
  template int ideal_mu(const FractionalIdeal<F>&);                                              \
  template std::optional<TruncatedSeries<F>> find_reduction(const FractionalIdeal<F>&);

CMTYPE_FRACTIONAL_INSTANTIATE(Rationals)
CMTYPE_FRACTIONAL_INSTANTIATE(PrimeField)

}  // namespace cmtype
