#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "symlie/error.hpp"

namespace symlie {

/// Descriptor of the ground field: the rationals, the Gaussian rationals
/// Q(i), or a prime field F_p. Scalars carry their descriptor and refuse to
/// combine with scalars of another field.
class Field {
 public:
  enum class Kind { Rational, Gaussian, Prime };

  Field() = default;

  static Field rational() { return Field(Kind::Rational, 0); }
  static Field gaussian() { return Field(Kind::Gaussian, 0); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  /// Accepts "Q", "Qi", "Fp(p)", "F_p" and "Fp" followed by digits.
  static Field parse(std::string_view tag);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_prime() const noexcept { return kind_ == Kind::Prime; }

  std::string tag() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::Rational;
  std::uint64_t p_ = 0;
};

bool is_prime_number(std::uint64_t n) noexcept;

/// Exact element of a Field. Rationals use GMP (always canonical), Gaussian
/// rationals a pair of them, prime-field elements a residue in [0, p).
class Scalar {
 public:
  explicit Scalar(Field field = Field::rational());

  static Scalar from_int(Field field, long value);
  static Scalar from_rational(Field field, const mpq_class& value);
  /// Only valid for Gaussian fields (re + im*i).
  static Scalar gaussian(const mpq_class& re, const mpq_class& im);
  static Scalar imaginary_unit();

  /// Parses "p/q", "a+bi", "r mod p" and plain integers / fractions (which are
  /// reduced into a prime field when needed).
  static Scalar parse(Field field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  /// Rational part (the rational value, or the real part in Q(i)).
  const mpq_class& real() const noexcept { return re_; }
  const mpq_class& imag() const noexcept { return im_; }
  std::uint64_t residue() const noexcept { return r_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws Singular on zero.
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Total order used for canonical (deterministic) output only; not an
  /// ordering of the field.
  friend bool canonical_less(const Scalar& a, const Scalar& b);

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  mpq_class re_;
  mpq_class im_;
  std::uint64_t r_ = 0;
};

/// Exact square root inside the scalar's own field, if one exists. For Q(i)
/// the principal root has positive real part (or zero real part and
/// non-negative imaginary part).
bool try_sqrt(const Scalar& x, Scalar& root);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace symlie
