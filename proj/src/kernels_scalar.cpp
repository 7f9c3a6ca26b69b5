#include "cmtype/kernels.hpp"

#include <cstddef>

namespace cmtype::kernels::scalar {

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t{factor} * src[i]) % p);
  }
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p) {
  for (auto& x : dst) x = static_cast<std::uint32_t>(std::uint64_t{factor} * x % p);
}

void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

bool subset_words(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::uint64_t stray = 0;
  for (std::size_t i = 0; i < a.size(); ++i) stray |= a[i] & ~b[i];
  return stray == 0;
}

}  // namespace cmtype::kernels::scalar
