#include "cmtype/errors.hpp"
#include "cmtype/kernels.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace cmtype::kernels;

namespace {

std::mt19937 gen(99u);

std::vector<std::uint32_t> residues(std::size_t n, std::uint32_t p) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = gen() % p;
  return v;
}

std::vector<std::uint64_t> words(std::size_t n) {
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = (std::uint64_t{gen()} << 32) | gen();
  return v;
}

}  // namespace

TEST(Kernels, ScalarReference) {
  std::vector<std::uint32_t> d{1, 2, 3, 4};
  const std::vector<std::uint32_t> s{4, 3, 2, 1};
  scalar::axpy_mod(d, s, 2, 5);
  EXPECT_EQ(d, (std::vector<std::uint32_t>{4, 3, 2, 1}));
  scalar::scale_mod(d, 3, 5);
  EXPECT_EQ(d, (std::vector<std::uint32_t>{2, 4, 1, 3}));
  const std::vector<std::uint64_t> a{0b0101}, b{0b0111};
  EXPECT_TRUE(scalar::subset_words(a, b));
  EXPECT_FALSE(scalar::subset_words(b, a));
}

TEST(Kernels, DispatchSelection) {
  EXPECT_TRUE(isa_supported(Isa::scalar));
  const Isa before = active_isa();
  set_isa(Isa::scalar);
  EXPECT_EQ(active_isa(), Isa::scalar);
  EXPECT_EQ(isa_name(Isa::scalar), "scalar");
  if (!isa_supported(Isa::avx2)) {
    EXPECT_THROW(set_isa(Isa::avx2), cmtype::ArgumentError);
  }
  set_isa(before);
}

#if defined(CMTYPE_HAVE_AVX2)
TEST(Kernels, Avx2MatchesScalar) {
  if (!isa_supported(Isa::avx2)) GTEST_SKIP() << "host has no AVX2";
  for (const std::uint32_t p : {2u, 3u, 5u, 251u, 32749u, 65521u}) {
    for (std::size_t n = 0; n < 70; n += 3) {
      const auto src = residues(n, p);
      auto d1 = residues(n, p);
      auto d2 = d1;
      const std::uint32_t f = gen() % p;
      scalar::axpy_mod(d1, src, f, p);
      avx2::axpy_mod(d2, src, f, p);
      ASSERT_EQ(d1, d2) << "axpy p=" << p << " n=" << n;
      scalar::scale_mod(d1, f, p);
      avx2::scale_mod(d2, f, p);
      ASSERT_EQ(d1, d2) << "scale p=" << p << " n=" << n;
    }
    // Extreme operands: everything p - 1.
    std::vector<std::uint32_t> d1(37, p - 1), d2(37, p - 1);
    const std::vector<std::uint32_t> s(37, p - 1);
    scalar::axpy_mod(d1, s, p - 1, p);
    avx2::axpy_mod(d2, s, p - 1, p);
    ASSERT_EQ(d1, d2);
  }
  for (std::size_t n = 0; n < 20; ++n) {
    const auto src = words(n);
    auto a1 = words(n);
    auto a2 = a1;
    scalar::or_words(a1, src);
    avx2::or_words(a2, src);
    ASSERT_EQ(a1, a2);
    scalar::and_words(a1, src);
    avx2::and_words(a2, src);
    ASSERT_EQ(a1, a2);
    const auto b = words(n);
    auto sub = b;
    scalar::and_words(sub, words(n));
    EXPECT_EQ(scalar::subset_words(sub, b), avx2::subset_words(sub, b));
    EXPECT_TRUE(avx2::subset_words(sub, b));
    EXPECT_EQ(scalar::subset_words(b, sub), avx2::subset_words(b, sub));
  }
}
#endif
