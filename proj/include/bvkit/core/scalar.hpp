#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace bvkit {

/// Coefficient field of a run: the rationals or a prime field Z/p.
///
/// Z/2 is accepted only when explicitly requested as a diagnostic; it erases
/// every Koszul sign and is useful for separating sign bugs from the rest.
class Field {
 public:
  static Field rationals() { return Field{0}; }
  static Field prime(unsigned long p, bool allow_two = false);
  /// Accepts "Q" or "Fp:<p>".
  static Field parse(std::string_view text, bool allow_two = false);

  bool is_rational() const { return modulus_ == 0; }
  unsigned long characteristic() const { return modulus_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(unsigned long p) : modulus_(p) {}
  unsigned long modulus_ = 0;
};

/// Exact scalar. A scalar either lives in Z/p (modulus != 0) or is a plain
/// rational. Plain rationals behave as universal constants: combining one
/// with a Z/p scalar reduces it into that prime field first.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT: integer literals are scalars
  explicit Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Scalar of the given field.
  static Scalar in(const Field& field, long value);
  static Scalar in(const Field& field, const mpq_class& value);
  /// Parses "n" or "n/d" (optional leading '-').
  static Scalar parse(std::string_view text);
  /// (-1)^exponent.
  static Scalar sign(long exponent) { return Scalar(exponent % 2 == 0 ? 1 : -1); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  unsigned long modulus() const { return modulus_; }
  const mpq_class& value() const { return value_; }

  /// For rationals: sign of the value. For Z/p: 0 if zero, else 1.
  int signum() const { return sgn(value_); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Rationals print as "n" or "n/d"; Z/p residues print in [0, p).
  std::string to_string() const;
  /// Residues in Z/p print as the representative in (-p/2, p/2], so that
  /// -1 reads as "-1" instead of "p-1".
  std::string to_display_string() const;

 private:
  void adopt(unsigned long modulus);
  void reduce();

  mpq_class value_{0};
  unsigned long modulus_ = 0;
};

}  // namespace bvkit
