#include "cmtype/errors.hpp"
#include "cmtype/relideal.hpp"

#include "ideal_oracles.hpp"

#include <gtest/gtest.h>

using namespace cmtype;

namespace {

struct Instance {
  SemigroupPtr h;
  std::vector<bool> table;
  std::vector<int> ga;
  std::vector<int> gb;
};

Instance random_instance() {
  Instance in;
  in.h = make_semigroup(oracle::random_generators(15));
  // Members up to well past every window used below.
  in.table = oracle::members_upto(in.h->generators(), 4 * in.h->conductor() + 200);
  for (auto* g : {&in.ga, &in.gb}) {
    const int n = oracle::uniform(1, 3);
    for (int i = 0; i < n; ++i) g->push_back(oracle::uniform(-10, 20));
  }
  return in;
}

}  // namespace

TEST(RelativeIdeal, CanonicalFormAndPrinting) {
  const auto h = make_semigroup({3, 4, 5});
  const auto e = RelativeIdeal::from_exponents(h, {5, 3});
  EXPECT_EQ(e.min_element(), 3);
  EXPECT_EQ(e.to_string(), "{3} ∪ [5,∞)");
  EXPECT_EQ(e.minimal_generators(), (std::vector<int>{3, 5}));
  EXPECT_EQ(e, RelativeIdeal::from_exponents(h, {3, 5, 8, 9}));
  EXPECT_EQ(RelativeIdeal::maximal_ideal(h), RelativeIdeal::from_exponents(h, {3, 4, 5}));
  EXPECT_THROW(RelativeIdeal::from_exponents(h, std::vector<int>{}), ArgumentError);
  const auto dvr = make_semigroup({1});
  EXPECT_EQ(RelativeIdeal::from_exponents(dvr, {4, 7}).minimal_generators(), std::vector<int>{4});
  EXPECT_EQ(RelativeIdeal::ring(dvr).mu(), 1);
}

TEST(RelativeIdeal, CanonicalDualExamples) {
  const auto h = make_semigroup({3, 4, 5});
  const auto k = canonical_relative_ideal(h);
  EXPECT_EQ(canonical_dual(RelativeIdeal::ring(h)), k);
  EXPECT_EQ(canonical_dual(k), RelativeIdeal::ring(h));
  const auto j = RelativeIdeal::from_exponents(h, {3, 5});
  const auto dual = canonical_dual(j);
  EXPECT_EQ(dual, RelativeIdeal::from_exponents(h, {-2, 0, 1, 2}));
  EXPECT_EQ(dual.to_string(), "{-2} ∪ [0,∞)");
  EXPECT_EQ(dual.mu(), 2);
}

TEST(RelativeIdeal, Errors) {
  const auto h = make_semigroup({3, 4, 5});
  const auto g = make_semigroup({3, 7});
  const auto a = RelativeIdeal::ring(h);
  const auto b = RelativeIdeal::ring(g);
  EXPECT_THROW(sum(a, b), ArgumentError);
  EXPECT_THROW(product(a, b), ArgumentError);
  EXPECT_THROW(colon(a, b), ArgumentError);
  EXPECT_THROW(intersect(a, b), ArgumentError);
  EXPECT_THROW(quotient_length(RelativeIdeal::maximal_ideal(h), a), ContainmentError);
}

// Set-definition oracle on windows of width 2c around each result.
TEST(RelativeIdeal, OperationsMatchSetOracle) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto in = random_instance();
    const auto a = RelativeIdeal::from_exponents(in.h, in.ga);
    const auto b = RelativeIdeal::from_exponents(in.h, in.gb);
    for (const auto& r : {a, b, sum(a, b), product(a, b), colon(a, b), intersect(a, b)}) {
      r.check_invariants();
    }
    EXPECT_EQ(RelativeIdeal::from_exponents(in.h, a.minimal_generators()), a);
    const auto bad = oracle::relideal_mismatches(in.h, in.ga, in.gb);
    EXPECT_TRUE(bad.empty()) << bad.front();
  }
}

TEST(RelativeIdeal, AlgebraicProperties) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto in = random_instance();
    const auto& h = in.h;
    const auto a = RelativeIdeal::from_exponents(h, in.ga);
    const auto b = RelativeIdeal::from_exponents(h, in.gb);
    const auto k = canonical_relative_ideal(h);
    EXPECT_EQ(canonical_dual(canonical_dual(a)), a);
    EXPECT_EQ(colon(k, product(a, b)), colon(colon(k, a), b));
    EXPECT_EQ(product(a, b), product(b, a));
    EXPECT_EQ(product(RelativeIdeal::ring(h), a), a);
    EXPECT_EQ(colon(a, RelativeIdeal::ring(h)), a);
    EXPECT_TRUE(product(colon(a, b), b).is_subset_of(a));
    const auto s = sum(a, b);
    const auto x = intersect(a, b);
    EXPECT_EQ(quotient_length(s, x), quotient_length(s, a) + quotient_length(a, x));
    EXPECT_EQ(a.shifted(5).min_element(), a.min_element() + 5);
    EXPECT_EQ(quotient_length(a, a.shifted(h->multiplicity())), h->multiplicity());
  }
}
