#pragma once

// Data-parallel inner loops.  Every kernel has a portable scalar reference
// and, on x86-64, an AVX2 variant; the dispatcher picks one at startup.
//
// The F_p kernels require p < 2^16 and operands already reduced mod p, so
// that (p-1)^2 + (p-1) fits in 32 bits.

#include <cstdint>
#include <span>
#include <string_view>

namespace cmtype::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa active_isa();
// Throws ArgumentError if the requested ISA is not available on this host.
void set_isa(Isa isa);

// dst[i] = (dst[i] + factor * src[i]) mod p
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p);
// dst[i] = (dst[i] * factor) mod p
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p);

void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
// True iff every bit set in a is set in b.
bool subset_words(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p);
void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
bool subset_words(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
}  // namespace scalar

#if defined(CMTYPE_HAVE_AVX2)
namespace avx2 {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p);
void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
bool subset_words(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
}  // namespace avx2
#endif

}  // namespace cmtype::kernels
