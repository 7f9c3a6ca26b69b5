#include "cmtype/kernels.hpp"

#include <immintrin.h>

#include <cstddef>

namespace cmtype::kernels::avx2 {
namespace {

// Barrett reduction of eight lanes x < 2^32 by p < 2^16, mu = floor(2^32 / p).
// The quotient estimate is low by at most one, so a single conditional
// subtraction finishes the job.
inline __m256i reduce(__m256i x, __m256i vp, __m256i vmu) {
  const __m256i even = _mm256_mul_epu32(x, vmu);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), vmu);
  const __m256i q = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0b10101010);
  const __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
}

inline std::uint32_t barrett_mu(std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
}

}  // namespace

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
  const std::size_t n = dst.size();
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vmu = _mm256_set1_epi32(static_cast<int>(barrett_mu(p)));
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    const __m256i x = _mm256_add_epi32(_mm256_mullo_epi32(s, vf), d);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), reduce(x, vp, vmu));
  }
  scalar::axpy_mod(dst.subspan(i), src.subspan(i), factor, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p) {
  const std::size_t n = dst.size();
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vmu = _mm256_set1_epi32(static_cast<int>(barrett_mu(p)));
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    const __m256i x = _mm256_mullo_epi32(d, vf);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), reduce(x, vp, vmu));
  }
  scalar::scale_mod(dst.subspan(i), factor, p);
}

void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), s));
  }
  scalar::or_words(dst.subspan(i), src.subspan(i));
}

void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    _mm256_storeu_si256(d, _mm256_and_si256(_mm256_loadu_si256(d), s));
  }
  scalar::and_words(dst.subspan(i), src.subspan(i));
}

bool subset_words(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const std::size_t n = a.size();
  __m256i stray = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    stray = _mm256_or_si256(stray, _mm256_andnot_si256(vb, va));
  }
  if (!_mm256_testz_si256(stray, stray)) return false;
  return scalar::subset_words(a.subspan(i), b.subspan(i));
}

}  // namespace cmtype::kernels::avx2
