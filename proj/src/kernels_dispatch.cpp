#include "cmtype/errors.hpp"
#include "cmtype/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace cmtype::kernels {
namespace {

Isa detect() {
#if defined(CMTYPE_HAVE_AVX2)
  if (std::getenv("CMTYPE_FORCE_SCALAR") == nullptr && __builtin_cpu_supports("avx2")) {
    return Isa::avx2;
  }
#endif
  return Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(CMTYPE_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw ArgumentError("kernel ISA '" + std::string(isa_name(isa)) + "' is not available");
  }
  current().store(isa, std::memory_order_relaxed);
}

#if defined(CMTYPE_HAVE_AVX2)
#define CMTYPE_DISPATCH(fn, ...) \
  return active_isa() == Isa::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__)
#else
#define CMTYPE_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
  CMTYPE_DISPATCH(axpy_mod, dst, src, factor, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p) {
  CMTYPE_DISPATCH(scale_mod, dst, factor, p);
}

void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  CMTYPE_DISPATCH(or_words, dst, src);
}

void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  CMTYPE_DISPATCH(and_words, dst, src);
}

bool subset_words(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  CMTYPE_DISPATCH(subset_words, a, b);
}

#undef CMTYPE_DISPATCH

}  // namespace cmtype::kernels
