#include "cmtype/errors.hpp"
#include "cmtype/fractional.hpp"

#include "ideal_oracles.hpp"
#include "series_gen.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cmtype;

namespace {

template <CoefficientField F>
FractionalIdeal<F> make(const SemigroupPtr& h, const F& f, const std::vector<TruncatedSeries<F>>& g,
                        std::optional<int> slack = std::nullopt) {
  return ideal_from_generators<F>(h, f, g, slack);
}

RelativeIdeal random_relative(const SemigroupPtr& h) {
  std::vector<int> gens;
  const int n = oracle::uniform(1, 3);
  for (int i = 0; i < n; ++i) gens.push_back(oracle::uniform(-6, 18));
  return RelativeIdeal::from_exponents(h, gens);
}

}  // namespace

TEST(Fractional, GeneratorExamples) {
  const Rationals q;
  const auto h345 = make_semigroup({3, 4, 5});
  const auto i = parse_ideal(h345, q, "t^3, t^4");
  EXPECT_EQ(i.order(), 3);
  EXPECT_EQ(i.top(), 6);
  EXPECT_EQ(i.window_dimension(), 2);
  EXPECT_EQ(i, from_relative(RelativeIdeal::from_exponents(h345, {3, 4}), q));
  EXPECT_TRUE(i.is_monomial());

  const PrimeField f5(5);
  const auto h37 = make_semigroup({3, 7});
  const auto j = parse_ideal(h37, f5, "t^6 - 2*t^7, t^10");
  EXPECT_EQ(j.order(), 6);
  EXPECT_EQ(j.top(), 18);
  const auto values = j.value_set();
  EXPECT_EQ(j.window_dimension(), static_cast<int>(values.window_members().size()));
  EXPECT_FALSE(j.is_monomial());
  j.check_invariants();

  const auto dvr = make_semigroup({1});
  const auto r = parse_ideal(dvr, q, "1");
  EXPECT_EQ(r.order(), 0);
  EXPECT_EQ(r.top(), 0);
  EXPECT_EQ(r.window_dimension(), 0);
  EXPECT_EQ(ideal_mu(r), 1);
  EXPECT_EQ(parse_ideal(dvr, q, "t^2 + t^5, t^3"), from_relative(RelativeIdeal::principal(dvr, 2), q));
}

TEST(Fractional, ConstructionErrors) {
  const Rationals q;
  const auto h = make_semigroup({3, 7});
  EXPECT_THROW(parse_ideal(h, q, "t^3 - t^3"), ArgumentError);
  TruncatedSeries<Rationals> rough(q, 8);
  rough.add_term(6, 1);
  const std::vector<TruncatedSeries<Rationals>> gens{rough};
  EXPECT_THROW(make(h, q, gens), PrecisionError);
  EXPECT_THROW(ideal_sum(parse_ideal(h, q, "t^3"), parse_ideal(make_semigroup({3, 4, 5}), q, "t^3")),
               ArgumentError);
  const auto i = parse_ideal(h, q, "t^6 - t^7, t^10");
  EXPECT_THROW(ideal_quotient_length(i, from_relative(RelativeIdeal::ring(h), q)), ContainmentError);
  EXPECT_THROW(i.contains(rough), PrecisionError);
}

TEST(Fractional, UlrichExampleOverRationals) {
  const Rationals q;
  const auto h = make_semigroup({3, 7});
  const auto r = from_relative(RelativeIdeal::ring(h), q);
  const auto i = parse_ideal(h, q, "t^6 - t^7, t^10");
  EXPECT_EQ(ideal_mu(i), 2);
  EXPECT_FALSE(is_principal(i));
  EXPECT_TRUE(is_principal(r));
  // H \ v(I) = {0, 3, 7}.
  EXPECT_EQ(i.value_set(), RelativeIdeal::from_exponents(h, {6, 9, 10, 14}));
  EXPECT_EQ(ideal_quotient_length(r, i), 3);

  const auto ii = ideal_colon(i, i);
  EXPECT_TRUE(ideal_contains(ii, r));
  EXPECT_FALSE(ii == r);
  EXPECT_EQ(ideal_product(r, i), i);

  const auto x = find_reduction(i);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, parse_series("t^6 - t^7", q));
  const std::vector<TruncatedSeries<Rationals>> one{*x};
  EXPECT_EQ(ideal_product(i, i), ideal_product(make(h, q, one), i));

  EXPECT_FALSE(find_reduction(parse_ideal(h, q, "t^6, t^10")).has_value());
  const auto h345 = make_semigroup({3, 4, 5});
  const auto m = from_relative(RelativeIdeal::maximal_ideal(h345), q);
  EXPECT_EQ(*find_reduction(m), parse_series("t^3", q));
}

TEST(Fractional, CanonicalAndBridgeExamples) {
  const Rationals q;
  const auto h = make_semigroup({3, 4, 5});
  const auto k = from_relative(canonical_relative_ideal(h), q);
  EXPECT_EQ(ideal_mu(k), 2);
  EXPECT_EQ(ideal_colon(k, k), from_relative(RelativeIdeal::ring(h), q));
  EXPECT_EQ(from_relative(RelativeIdeal::from_exponents(h, {3, 5}), q), parse_ideal(h, q, "t^3, t^5"));
  EXPECT_EQ(from_relative(RelativeIdeal::ring(h), q).value_set(), RelativeIdeal::ring(h));
}

TEST(Fractional, EngineAgreementWithRelativeIdeals) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = make_semigroup(oracle::random_generators(12));
    const auto a = random_relative(h);
    const auto b = random_relative(h);
    auto check = [&](const auto& f) {
      const auto fa = from_relative(a, f);
      const auto fb = from_relative(b, f);
      EXPECT_EQ(fa.value_set(), a);
      EXPECT_EQ(ideal_mu(fa), a.mu());
      EXPECT_EQ(ideal_colon(fa, fb), from_relative(colon(a, b), f));
      EXPECT_EQ(ideal_product(fa, fb), from_relative(product(a, b), f));
      EXPECT_EQ(ideal_sum(fa, fb), from_relative(sum(a, b), f));
      EXPECT_EQ(ideal_intersect(fa, fb), from_relative(intersect(a, b), f));
      EXPECT_EQ(ideal_contains(fa, fb), b.is_subset_of(a));
      const auto s = sum(a, b);
      EXPECT_EQ(ideal_quotient_length(from_relative(s, f), fa), quotient_length(s, a));
    };
    if (trial % 4 == 0) {
      check(Rationals());
    } else {
      check(PrimeField(trial % 3 == 0 ? 2 : 7));
    }
  }
}

TEST(Fractional, InvariantsAndValueSets) {
  for (int trial = 0; trial < 120; ++trial) {
    const auto h = make_semigroup(oracle::random_generators(9, 3));
    const PrimeField f(trial % 2 ? 3 : 5);
    const auto a = make(h, f, testgen::random_gens(f, 3, -2, 8));
    const auto b = make(h, f, testgen::random_gens(f, 3, -2, 8));
    for (const auto& i : {a, b, ideal_sum(a, b), ideal_product(a, b), ideal_colon(a, b),
                          ideal_intersect(a, b)}) {
      i.check_invariants();
      const auto v = i.value_set();
      v.check_invariants();
      EXPECT_EQ(v.min_element(), i.order());
      const auto mono = from_relative(v, f);
      EXPECT_EQ(i.is_monomial(), i == mono);
      EXPECT_EQ(ideal_quotient_length(i, ideal_product(i, from_relative(RelativeIdeal::principal(h, 0), f))), 0);
    }
    EXPECT_TRUE(ideal_contains(ideal_sum(a, b), a));
    EXPECT_TRUE(ideal_contains(a, ideal_intersect(a, b)));
    EXPECT_TRUE(ideal_contains(a, ideal_product(ideal_colon(a, b), b)));
    EXPECT_EQ(ideal_product(a, b), ideal_product(b, a));
    for (const auto& g : a.generators()) EXPECT_TRUE(a.contains(g));
    // ℓ(I / t^e I) = e for a rank-one module.
    const int e = h->multiplicity();
    EXPECT_EQ(ideal_quotient_length(a, ideal_product(a, from_relative(RelativeIdeal::principal(h, e), f))), e);
  }
}

TEST(Fractional, WindowSlackStability) {
  for (int trial = 0; trial < 80; ++trial) {
    const auto h = make_semigroup(oracle::random_generators(10, 3));
    const PrimeField f(5);
    const auto gens = testgen::random_gens(f, 3, 0, 10);
    const auto base = make(h, f, gens);
    const int s = h->multiplicity();
    EXPECT_EQ(make(h, f, gens, s + 3), base);
    EXPECT_EQ(make(h, f, gens, 0), base);
    const auto other = make(h, f, testgen::random_gens(f, 2, 0, 10));
    EXPECT_EQ(ideal_colon(make(h, f, gens, s + 3), other), ideal_colon(base, other));
    EXPECT_EQ(ideal_product(make(h, f, gens, s + 3), other), ideal_product(base, other));
  }
}

// x ∈ a : b checked directly over every x in the window space; membership
// in a is decided against a brute-force enumeration of a's window.
TEST(Fractional, ColonMatchesExhaustiveEnumeration) {
  const std::vector<std::vector<int>> small = {{2, 3}, {3, 4, 5}, {3, 4}, {3, 5}, {2, 5}, {2, 7},
                                               {2, 9}, {4, 5, 6, 7}, {4, 5, 6}, {3, 5, 7}, {4, 5, 7},
                                               {5, 6, 7, 8, 9}, {1}};
  long checked = 0;
  for (int trial = 0; trial < 90; ++trial) {
    const auto h = make_semigroup(small[static_cast<std::size_t>(trial) % small.size()]);
    ASSERT_LE(h->conductor(), 8);
    const PrimeField f(trial % 2 ? 2 : 3);
    const auto ga = testgen::random_gens(f, 2, 0, 5, 5, 3, 2);
    const auto gb = testgen::random_gens(f, 2, 0, 5, 5, 3, 2);
    const auto bad = oracle::series_colon_mismatches(h, f, ga, gb, checked);
    ASSERT_TRUE(bad.empty()) << bad.front();
  }
  EXPECT_GT(checked, 1000);
}
