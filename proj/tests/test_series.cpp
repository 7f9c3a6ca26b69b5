#include "cmtype/errors.hpp"
#include "cmtype/series.hpp"

#include <gtest/gtest.h>

using namespace cmtype;

TEST(Parser, Examples) {
  const Rationals q;
  const auto a = parse_series("t^6 - 1*t^7", q);
  EXPECT_EQ(*a.order(), 6);
  EXPECT_EQ(a.terms().size(), 2u);
  EXPECT_EQ(a.coeff(6), 1);
  EXPECT_EQ(a.coeff(7), -1);
  EXPECT_TRUE(a.is_exact());

  const auto b = parse_series("t^10", q);
  EXPECT_EQ(*b.order(), 10);
  EXPECT_TRUE(b.is_monomial());

  const PrimeField f5(5);
  const auto c = parse_series("2*t^4 + 3*t^5", f5);
  EXPECT_EQ(*c.order(), 4);
  EXPECT_EQ(c.coeff(4), 2u);
  EXPECT_EQ(c.coeff(5), 3u);
}

TEST(Parser, GrammarCorners) {
  const Rationals q;
  EXPECT_EQ(parse_series("  t ", q), TruncatedSeries<Rationals>::monomial(q, 1));
  EXPECT_EQ(parse_series("5", q).coeff(0), 5);
  EXPECT_EQ(parse_series("-3*t^-2", q).coeff(-2), -3);
  EXPECT_EQ(parse_series("1/2*t + 1/2*t", q), TruncatedSeries<Rationals>::monomial(q, 1));
  EXPECT_TRUE(parse_series("t^3 - t^3", q).is_zero());
  EXPECT_EQ(parse_series("2/4*t", q).coeff(1), mpq_class(1, 2));
  EXPECT_EQ(parse_series("t^2+t^2", PrimeField(2)).is_zero(), true);
  EXPECT_EQ(parse_series("-1*t", PrimeField(7)).coeff(1), 6u);
  EXPECT_EQ(parse_expression("t^6 - 2*t^7").terms.size(), 2u);
  EXPECT_TRUE(parse_expression("3*t^4").is_monomial());
}

TEST(Parser, ErrorsCarryPositions) {
  auto position_of = [](std::string_view text) -> long {
    try {
      parse_expression(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  EXPECT_EQ(position_of("t^"), 2);
  EXPECT_EQ(position_of("t^6 + "), 6);
  EXPECT_EQ(position_of("x"), 0);
  EXPECT_EQ(position_of("t^6 t^7"), 4);
  EXPECT_GE(position_of(""), 0);
  EXPECT_GE(position_of("1/0*t"), 0);

  try {
    parse_expression_list("t^3, t^4 +, t^5");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 10u);
  }
  EXPECT_EQ(parse_expression_list("t^3, t^4 - t^5").size(), 2u);
  EXPECT_THROW(parse_series("1/2*t", PrimeField(3)), FieldError);
}

TEST(SeriesMul, ExactProducts) {
  const Rationals q;
  EXPECT_EQ(series_mul(parse_series("t^3", q), parse_series("t^7", q)), parse_series("t^10", q));
  EXPECT_EQ(series_mul(parse_series("t^6 - t^7", q), parse_series("t^6 + t^7", q)),
            parse_series("t^12 - t^14", q));
  EXPECT_THROW(series_mul(parse_series("t", PrimeField(3)), parse_series("t", PrimeField(5))),
               FieldError);
}

TEST(SeriesMul, PrecisionRule) {
  const Rationals q;
  TruncatedSeries<Rationals> x(q, 9);
  x.add_term(3, 1);
  x.add_term(5, 2);
  x.add_term(12, 7);  // beyond the precision, dropped
  EXPECT_EQ(x.terms().size(), 2u);
  const auto y = TruncatedSeries<Rationals>::monomial(q, 4);
  const auto z = series_mul(x, y);
  ASSERT_TRUE(z.precision().has_value());
  EXPECT_EQ(*z.precision(), 13);
  EXPECT_EQ(z.coeff(7), 1);
  EXPECT_EQ(z.coeff(9), 2);

  TruncatedSeries<Rationals> w(q, 10);
  w.add_term(2, 1);
  EXPECT_EQ(*series_mul(x, w).precision(), std::min(9 + 2, 10 + 3));
  EXPECT_EQ(x.to_string(), "t^3 + 2*t^5 + O(t^9)");
  EXPECT_EQ(x.shifted(2).precision(), 11);
  EXPECT_EQ(x.truncated(4).terms().size(), 1u);
}
