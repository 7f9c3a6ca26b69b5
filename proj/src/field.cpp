#include "cmtype/field.hpp"

#include "cmtype/errors.hpp"
#include "cmtype/kernels.hpp"

#include <charconv>

namespace cmtype {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 2 || p >= (1u << 16)) {
    throw FieldError("prime field characteristic must satisfy 2 <= p < 65536, got " +
                     std::to_string(p));
  }
  if (!is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{FieldKind::prime_field, static_cast<std::uint32_t>(p)};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "qq" || text == "QQ") return rationals();
  if (text.starts_with("fp:")) {
    const auto digits = text.substr(3);
    std::uint64_t p = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty()) {
      throw FieldError("malformed field modulus '" + std::string(digits) + "'");
    }
    return prime(p);
  }
  throw FieldError("unknown field '" + std::string(text) + "' (expected qq or fp:<p>)");
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::rationals ? "qq" : "fp:" + std::to_string(characteristic);
}

// ---------------------------------------------------------------------------

Rationals::Elem Rationals::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw FieldError("zero denominator in rational coefficient");
  Elem q(num, den);
  q.canonicalize();
  return q;
}

Rationals::Elem Rationals::inv(const Elem& a) const {
  if (sgn(a) == 0) throw FieldError("division by zero");
  return 1 / a;
}

void Rationals::axpy(std::span<Elem> dst, std::span<const Elem> src, const Elem& factor) const {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (sgn(src[i]) != 0) dst[i] += factor * src[i];
  }
}

void Rationals::scale(std::span<Elem> row, const Elem& factor) const {
  for (auto& x : row) {
    if (sgn(x) != 0) x *= factor;
  }
}

// ---------------------------------------------------------------------------

PrimeField::PrimeField(std::uint32_t p) : p_(FieldSpec::prime(p).characteristic) {}

PrimeField::PrimeField(const FieldSpec& spec) : PrimeField(spec.characteristic) {
  if (spec.kind != FieldKind::prime_field) throw FieldError("not a prime field spec");
}

PrimeField::Elem PrimeField::from_integer(const mpz_class& v) const {
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r.get_ui());
}

PrimeField::Elem PrimeField::from_fraction(const mpz_class&, const mpz_class&) const {
  throw FieldError("fraction coefficients are only valid over qq, not fp:" + std::to_string(p_));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw FieldError("division by zero in fp:" + std::to_string(p_));
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p_;
  for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1u) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<Elem>(result);
}

void PrimeField::axpy(std::span<Elem> dst, std::span<const Elem> src, Elem factor) const {
  if (factor == 0) return;
  kernels::axpy_mod(dst, src, factor, p_);
}

void PrimeField::scale(std::span<Elem> row, Elem factor) const {
  kernels::scale_mod(row, factor, p_);
}

}  // namespace cmtype
