#pragma once

// Truncated Laurent series over a coefficient field, plus the generator
// expression grammar:
//
//   expr  := term (('+' | '-') term)*
//   term  := [coeff '*'] 't' ['^' int] | coeff
//   coeff := int | int '/' int          (fractions only over qq)
//   int   := ['-'] digits
//
// Whitespace is insignificant and exponents may be negative.

#include "cmtype/errors.hpp"
#include "cmtype/field.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace cmtype {

// One parsed term before a field is chosen.
struct ParsedTerm {
  mpz_class numerator;
  mpz_class denominator = 1;
  bool is_fraction = false;
  int exponent = 0;
};

struct ParsedExpression {
  std::vector<ParsedTerm> terms;
  std::string text;

  // Exactly one term, i.e. a unit times a power of t.
  bool is_monomial() const { return terms.size() == 1; }
};

// Throws ParseError with a 0-based character position.
ParsedExpression parse_expression(std::string_view text);
// Comma separated expressions; error positions refer to the whole string.
std::vector<ParsedExpression> parse_expression_list(std::string_view text);

template <CoefficientField Field>
class TruncatedSeries {
 public:
  using Elem = typename Field::Elem;

  explicit TruncatedSeries(Field field, std::optional<int> precision = std::nullopt)
      : field_(std::move(field)), precision_(precision) {}

  static TruncatedSeries monomial(Field field, int exponent) {
    TruncatedSeries s(field);
    s.coeffs_.emplace(exponent, field.one());
    return s;
  }

  const Field& field() const { return field_; }
  // nullopt: exact (a Laurent polynomial).
  std::optional<int> precision() const { return precision_; }
  bool is_exact() const { return !precision_.has_value(); }
  bool is_zero() const { return coeffs_.empty(); }
  // nullopt for the zero series.
  std::optional<int> order() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
  }
  std::optional<int> max_exponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
  }
  bool is_monomial() const { return coeffs_.size() == 1 && is_exact(); }

  const std::map<int, Elem>& terms() const { return coeffs_; }

  Elem coeff(int exponent) const {
    const auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? field_.zero() : it->second;
  }

  // Adds c·t^exponent; terms beyond the precision are dropped.
  void add_term(int exponent, const Elem& c) {
    if (precision_ && exponent >= *precision_) return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, c);
    if (!inserted) it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) coeffs_.erase(it);
  }

  TruncatedSeries truncated(int precision) const {
    const int p = precision_ ? std::min(*precision_, precision) : precision;
    TruncatedSeries out(field_, p);
    for (const auto& [e, c] : coeffs_) {
      if (e < p) out.coeffs_.emplace(e, c);
    }
    return out;
  }

  TruncatedSeries scaled(const Elem& c) const {
    TruncatedSeries out(field_, precision_);
    if (field_.is_zero(c)) return out;
    for (const auto& [e, v] : coeffs_) out.coeffs_.emplace(e, field_.mul(v, c));
    return out;
  }

  TruncatedSeries shifted(int s) const {
    TruncatedSeries out(field_, precision_ ? std::optional<int>(*precision_ + s) : std::nullopt);
    for (const auto& [e, v] : coeffs_) out.coeffs_.emplace(e + s, v);
    return out;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return precision_ ? "O(t^" + std::to_string(*precision_) + ")" : "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      std::string coef = field_.format(c);
      const bool negative = !coef.empty() && coef[0] == '-';
      if (negative) coef.erase(0, 1);
      if (first) {
        os << (negative ? "-" : "");
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (coef != "1" || e == 0) os << coef << (e == 0 ? "" : "*");
      if (e != 0) os << "t" << (e == 1 ? "" : "^" + std::to_string(e));
    }
    if (precision_) os << " + O(t^" << *precision_ << ")";
    return os.str();
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.field_ == b.field_ && a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Field field_;
  std::optional<int> precision_;
  std::map<int, Elem> coeffs_;
};

// Product with precision min(prec(x) + ord(y), prec(y) + ord(x)); exact
// when both factors are exact.
template <CoefficientField Field>
TruncatedSeries<Field> series_mul(const TruncatedSeries<Field>& x, const TruncatedSeries<Field>& y) {
  if (!(x.field() == y.field())) throw FieldError("series over different fields");
  std::optional<int> precision;
  auto bound = [](std::optional<int> prec, std::optional<int> ord) -> std::optional<int> {
    if (!prec) return std::nullopt;
    // A zero factor with unknown tail still only pins down its own precision.
    return *prec + ord.value_or(0);
  };
  const auto px = bound(x.precision(), y.order());
  const auto py = bound(y.precision(), x.order());
  if (px && py) {
    precision = std::min(*px, *py);
  } else {
    precision = px ? px : py;
  }
  TruncatedSeries<Field> out(x.field(), precision);
  const Field& f = x.field();
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) out.add_term(ex + ey, f.mul(cx, cy));
  }
  return out;
}

template <CoefficientField Field>
TruncatedSeries<Field> to_series(const ParsedExpression& expr, const Field& field) {
  TruncatedSeries<Field> out(field);
  for (const auto& t : expr.terms) {
    const auto c = t.is_fraction ? field.from_fraction(t.numerator, t.denominator)
                                 : field.from_integer(t.numerator);
    out.add_term(t.exponent, c);
  }
  return out;
}

template <CoefficientField Field>
TruncatedSeries<Field> parse_series(std::string_view text, const Field& field) {
  return to_series(parse_expression(text), field);
}

}  // namespace cmtype
