#pragma once

// Coefficient fields: the rationals (arbitrary precision via GMP) and prime
// fields F_p with p < 2^16.  Both expose the same small interface so the
// linear algebra and series code can be written once as templates.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace cmtype {

enum class FieldKind { rationals, prime_field };

struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  // Throws FieldError unless 2 <= p < 2^16 and p is prime.
  static FieldSpec prime(std::uint64_t p);
  // Accepts "qq" or "fp:<p>".
  static FieldSpec parse(std::string_view text);

  std::string to_string() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

class Rationals {
 public:
  using Elem = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_integer(const mpz_class& v) const { return Elem(v); }
  Elem from_fraction(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const;

  // dst += factor * src
  void axpy(std::span<Elem> dst, std::span<const Elem> src, const Elem& factor) const;
  void scale(std::span<Elem> row, const Elem& factor) const;

  std::string format(const Elem& a) const { return a.get_str(); }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p);
  explicit PrimeField(const FieldSpec& spec);

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec{FieldKind::prime_field, p_}; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_integer(const mpz_class& v) const;
  // Fraction syntax is reserved for the rationals; always throws FieldError.
  Elem from_fraction(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p_); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;

  void axpy(std::span<Elem> dst, std::span<const Elem> src, Elem factor) const;
  void scale(std::span<Elem> row, Elem factor) const;

  std::string format(Elem a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

template <class F>
concept CoefficientField = requires(const F& f, const typename F::Elem& a) {
  { f.spec() } -> std::same_as<FieldSpec>;
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.mul(a, a) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
};

}  // namespace cmtype
