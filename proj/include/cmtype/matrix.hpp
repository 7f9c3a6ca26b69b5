#pragma once

// Dense coefficient matrices over a CoefficientField and the handful of
// row-space operations the ideal engines need.  Column 0 always stands for
// the matrix's base exponent; callers track that offset themselves.

#include "cmtype/errors.hpp"
#include "cmtype/field.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cmtype {

template <CoefficientField Field>
class CoeffMatrix {
 public:
  using Elem = typename Field::Elem;
  using Row = std::vector<Elem>;

  CoeffMatrix(Field field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

  CoeffMatrix(Field field, std::size_t cols, std::vector<Row> rows)
      : field_(std::move(field)), cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) check_length(r.size());
  }

  const Field& field() const { return field_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(std::size_t i) const { return rows_[i]; }

  void add_row(Row r) {
    check_length(r.size());
    rows_.push_back(std::move(r));
  }

  Row zero_row() const { return Row(cols_, field_.zero()); }

  Row unit_row(std::size_t col) const {
    Row r = zero_row();
    r[col] = field_.one();
    return r;
  }

  // Column of the leading nonzero entry, or nullopt for a zero row.
  std::optional<std::size_t> leading_column(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!field_.is_zero(rows_[i][j])) return j;
    }
    return std::nullopt;
  }

  // Pivot columns of a matrix already in reduced row-echelon form.
  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back(*leading_column(i));
    return out;
  }

  bool is_reduced() const {
    std::optional<std::size_t> last;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto lead = leading_column(i);
      if (!lead) return false;
      if (last && *lead <= *last) return false;
      if (rows_[i][*lead] != field_.one()) return false;
      for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (k != i && !field_.is_zero(rows_[k][*lead])) return false;
      }
      last = lead;
    }
    return true;
  }

  friend bool operator==(const CoeffMatrix& a, const CoeffMatrix& b) {
    return a.field_ == b.field_ && a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  void check_length(std::size_t n) const {
    if (n != cols_) {
      throw DimensionError("row of length " + std::to_string(n) + " in a matrix with " +
                           std::to_string(cols_) + " columns");
    }
  }

  Field field_;
  std::size_t cols_;
  std::vector<Row> rows_;
};

// Unique reduced row-echelon form of the row span (zero rows dropped).
template <CoefficientField Field>
CoeffMatrix<Field> reduce_echelon(const CoeffMatrix<Field>& m) {
  using Row = typename CoeffMatrix<Field>::Row;
  const Field& f = m.field();
  std::vector<Row> rows = m.rows();
  const std::size_t ncols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && f.is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    f.scale(rows[rank], f.inv(rows[rank][col]));
    const std::span<const typename Field::Elem> pivot_row(rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || f.is_zero(rows[i][col])) continue;
      f.axpy(rows[i], pivot_row, f.neg(rows[i][col]));
    }
    ++rank;
  }
  rows.resize(rank);
  return CoeffMatrix<Field>(f, ncols, std::move(rows));
}

// v minus its projection along the pivots of a reduced basis; zero iff v is
// in the row span.  Linear in v.
template <CoefficientField Field>
typename CoeffMatrix<Field>::Row residual(std::span<const typename Field::Elem> v,
                                          const CoeffMatrix<Field>& basis) {
  if (v.size() != basis.cols()) {
    throw DimensionError("vector of length " + std::to_string(v.size()) +
                         " against a basis with " + std::to_string(basis.cols()) + " columns");
  }
  const Field& f = basis.field();
  typename CoeffMatrix<Field>::Row r(v.begin(), v.end());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::size_t p = *basis.leading_column(i);
    if (f.is_zero(r[p])) continue;
    f.axpy(r, basis.row(i), f.neg(r[p]));
  }
  return r;
}

template <CoefficientField Field>
struct Membership {
  bool member = false;
  // Coefficients of v with respect to the basis rows (valid when member).
  std::vector<typename Field::Elem> coords;
};

// Requires `basis` in reduced form.
template <CoefficientField Field>
Membership<Field> member(std::span<const typename Field::Elem> v,
                         const CoeffMatrix<Field>& basis) {
  const Field& f = basis.field();
  const auto r = residual(v, basis);
  Membership<Field> out;
  for (const auto& x : r) {
    if (!f.is_zero(x)) return out;
  }
  out.member = true;
  for (const std::size_t p : basis.pivots()) out.coords.push_back(v[p]);
  return out;
}

// Reduced basis of span(a) ∩ span(b), via the Zassenhaus block reduction.
template <CoefficientField Field>
CoeffMatrix<Field> intersect(const CoeffMatrix<Field>& a, const CoeffMatrix<Field>& b) {
  if (a.cols() != b.cols()) {
    throw DimensionError("intersecting row spaces of widths " + std::to_string(a.cols()) +
                         " and " + std::to_string(b.cols()));
  }
  const Field& f = a.field();
  const std::size_t n = a.cols();
  CoeffMatrix<Field> block(f, 2 * n);
  for (const auto& r : a.rows()) {
    auto row = block.zero_row();
    std::copy(r.begin(), r.end(), row.begin());
    std::copy(r.begin(), r.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
    block.add_row(std::move(row));
  }
  for (const auto& r : b.rows()) {
    auto row = block.zero_row();
    std::copy(r.begin(), r.end(), row.begin());
    block.add_row(std::move(row));
  }
  const auto reduced = reduce_echelon(block);
  CoeffMatrix<Field> out(f, n);
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (*reduced.leading_column(i) < n) continue;
    const auto& r = reduced.row(i);
    out.add_row({r.begin() + static_cast<std::ptrdiff_t>(n), r.end()});
  }
  return reduce_echelon(out);
}

// Reduced basis of { x : x * A = 0 }, i.e. all linear relations among the
// rows of A.  Result has A.size() columns.
template <CoefficientField Field>
CoeffMatrix<Field> left_kernel(const CoeffMatrix<Field>& a) {
  const Field& f = a.field();
  const std::size_t n = a.cols();
  const std::size_t m = a.size();
  CoeffMatrix<Field> block(f, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    auto row = block.zero_row();
    std::copy(a.row(i).begin(), a.row(i).end(), row.begin());
    row[n + i] = f.one();
    block.add_row(std::move(row));
  }
  const auto reduced = reduce_echelon(block);
  CoeffMatrix<Field> out(f, m);
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (*reduced.leading_column(i) < n) continue;
    const auto& r = reduced.row(i);
    out.add_row({r.begin() + static_cast<std::ptrdiff_t>(n), r.end()});
  }
  return reduce_echelon(out);
}

}  // namespace cmtype
