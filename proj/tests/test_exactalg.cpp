#include "cmtype/errors.hpp"
#include "cmtype/field.hpp"
#include "cmtype/matrix.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cmtype;

namespace {

using Vec = std::vector<std::uint32_t>;

// Every vector in the row span, by enumerating all coefficient tuples.
std::set<Vec> span_of(const PrimeField& f, const std::vector<Vec>& rows, std::size_t cols) {
  std::set<Vec> out;
  const std::uint32_t p = f.characteristic();
  std::vector<std::uint32_t> coeff(rows.size(), 0);
  for (;;) {
    Vec v(cols, 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) v[j] = (v[j] + coeff[i] * rows[i][j]) % p;
    }
    out.insert(v);
    std::size_t k = 0;
    while (k < coeff.size() && ++coeff[k] == p) coeff[k++] = 0;
    if (k == coeff.size()) break;
  }
  return out;
}

std::vector<Vec> random_rows(std::uint32_t p, std::size_t n, std::size_t cols) {
  std::vector<Vec> rows(n, Vec(cols));
  for (auto& r : rows) {
    for (auto& x : r) x = static_cast<std::uint32_t>(oracle::uniform(0, static_cast<int>(p) - 1));
  }
  return rows;
}

}  // namespace

TEST(FieldSpec, ParsesAndValidates) {
  EXPECT_EQ(FieldSpec::parse("qq").kind, FieldKind::rationals);
  EXPECT_EQ(FieldSpec::parse("fp:5").characteristic, 5u);
  EXPECT_EQ(FieldSpec::parse("fp:65521").to_string(), "fp:65521");
  EXPECT_THROW(FieldSpec::parse("fp:6"), FieldError);
  EXPECT_THROW(FieldSpec::parse("fp:65537"), FieldError);
  EXPECT_THROW(FieldSpec::parse("fp:1"), FieldError);
  EXPECT_THROW(FieldSpec::parse("fp:"), FieldError);
  EXPECT_THROW(FieldSpec::parse("zz"), FieldError);
}

TEST(PrimeField, ArithmeticMatchesModularDefinition) {
  const PrimeField f(7);
  for (std::uint32_t a = 0; a < 7; ++a) {
    for (std::uint32_t b = 0; b < 7; ++b) {
      EXPECT_EQ(f.add(a, b), (a + b) % 7);
      EXPECT_EQ(f.sub(a, b), (a + 7 - b) % 7);
      EXPECT_EQ(f.mul(a, b), a * b % 7);
    }
    if (a != 0) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    }
  }
  EXPECT_THROW(f.inv(0), FieldError);
  EXPECT_EQ(f.from_integer(-1), 6u);
  EXPECT_THROW(f.from_fraction(1, 2), FieldError);
}

TEST(Rationals, Fractions) {
  const Rationals q;
  EXPECT_EQ(q.from_fraction(2, 4), mpq_class(1, 2));
  EXPECT_THROW(q.from_fraction(1, 0), FieldError);
  EXPECT_THROW(q.inv(0), FieldError);
  EXPECT_EQ(q.format(q.from_fraction(-3, 6)), "-1/2");
}

TEST(ReduceEchelon, SmallExamples) {
  const Rationals q;
  const auto a = reduce_echelon(CoeffMatrix<Rationals>(q, 2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(a, CoeffMatrix<Rationals>(q, 2, {{1, 0}, {0, 1}}));
  const auto b = reduce_echelon(CoeffMatrix<Rationals>(q, 2, {{1, 2}, {2, 4}}));
  EXPECT_EQ(b, CoeffMatrix<Rationals>(q, 2, {{1, 2}}));

  const PrimeField f3(3);
  const auto c = reduce_echelon(CoeffMatrix<PrimeField>(f3, 2, {{2, 1}, {1, 1}}));
  EXPECT_EQ(c, CoeffMatrix<PrimeField>(f3, 2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(span_of(f3, {{2, 1}, {1, 1}}, 2).size(), 9u);
}

TEST(ReduceEchelon, RationalEntries) {
  const Rationals q;
  const CoeffMatrix<Rationals> m(q, 3, {{2, 1, 0}, {mpq_class(1, 3), 0, 1}});
  const auto r = reduce_echelon(m);
  ASSERT_TRUE(r.is_reduced());
  EXPECT_EQ(r.row(0), (std::vector<mpq_class>{1, 0, 3}));
  EXPECT_EQ(r.row(1), (std::vector<mpq_class>{0, 1, -6}));
}

TEST(ReduceEchelon, RowSpaceMatchesBruteForce) {
  for (const std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t cols = static_cast<std::size_t>(oracle::uniform(1, 4));
      const auto rows = random_rows(p, static_cast<std::size_t>(oracle::uniform(1, 3)), cols);
      const auto r = reduce_echelon(CoeffMatrix<PrimeField>(f, cols, rows));
      ASSERT_TRUE(r.is_reduced());
      EXPECT_EQ(span_of(f, r.rows(), cols), span_of(f, rows, cols));
      EXPECT_EQ(reduce_echelon(r), r);
    }
  }
}

TEST(Member, Examples) {
  const Rationals q;
  const CoeffMatrix<Rationals> basis(q, 2, {{1, 2}});
  const auto zero = member<Rationals>(std::vector<mpq_class>{0, 0}, basis);
  EXPECT_TRUE(zero.member);
  EXPECT_EQ(zero.coords, std::vector<mpq_class>{0});
  const auto yes = member<Rationals>(std::vector<mpq_class>{1, 2}, basis);
  EXPECT_TRUE(yes.member);
  EXPECT_EQ(yes.coords, std::vector<mpq_class>{1});
  EXPECT_FALSE(member<Rationals>(std::vector<mpq_class>{1, 0}, basis).member);
  EXPECT_THROW(member<Rationals>(std::vector<mpq_class>{1, 0, 0}, basis), DimensionError);
  EXPECT_THROW(CoeffMatrix<Rationals>(q, 2, {{1, 2, 3}}), DimensionError);
}

TEST(Member, CoordinatesReproduceVector) {
  const PrimeField f(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rows = random_rows(5, 3, 4);
    const auto basis = reduce_echelon(CoeffMatrix<PrimeField>(f, 4, rows));
    for (const auto& v : span_of(f, rows, 4)) {
      const auto m = member<PrimeField>(v, basis);
      ASSERT_TRUE(m.member);
      Vec back(4, 0);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < 4; ++j) back[j] = (back[j] + m.coords[i] * basis.row(i)[j]) % 5;
      }
      EXPECT_EQ(back, v);
    }
  }
}

TEST(Intersect, MatchesSetIntersection) {
  for (const std::uint32_t p : {2u, 3u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t cols = static_cast<std::size_t>(oracle::uniform(1, 4));
      const auto a = random_rows(p, static_cast<std::size_t>(oracle::uniform(1, 3)), cols);
      const auto b = random_rows(p, static_cast<std::size_t>(oracle::uniform(1, 3)), cols);
      const auto got = intersect(CoeffMatrix<PrimeField>(f, cols, a), CoeffMatrix<PrimeField>(f, cols, b));
      ASSERT_TRUE(got.is_reduced());
      std::set<Vec> want;
      const auto sa = span_of(f, a, cols);
      const auto sb = span_of(f, b, cols);
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(want, want.end()));
      EXPECT_EQ(span_of(f, got.rows(), cols), want);
    }
  }
  const Rationals q;
  EXPECT_THROW(intersect(CoeffMatrix<Rationals>(q, 2), CoeffMatrix<Rationals>(q, 3)), DimensionError);
}

TEST(LeftKernel, MatchesExhaustiveSolve) {
  const PrimeField f(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(1, 4));
    const std::size_t cols = static_cast<std::size_t>(oracle::uniform(1, 3));
    const auto rows = random_rows(3, n, cols);
    const auto k = left_kernel(CoeffMatrix<PrimeField>(f, cols, rows));
    std::set<Vec> want;
    std::vector<Vec> units;
    for (std::size_t i = 0; i < n; ++i) {
      Vec u(n, 0);
      u[i] = 1;
      units.push_back(u);
    }
    for (const auto& x : span_of(f, units, n)) {
      bool zero = true;
      for (std::size_t j = 0; j < cols; ++j) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i) s = (s + x[i] * rows[i][j]) % 3;
        zero = zero && s == 0;
      }
      if (zero) want.insert(x);
    }
    EXPECT_EQ(span_of(f, k.rows(), n), want);
  }
}
