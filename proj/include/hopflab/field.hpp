#pragma once

// Exact scalars over Q, GF(p) and the cyclotomic fields Q(zeta_n).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hopflab/error.hpp"

namespace hopflab {

enum class FieldKind { Rational, Prime, Cyclotomic };

namespace detail {
struct CyclotomicData {
  int n = 0;
  int degree = 0;
  // Monic n-th cyclotomic polynomial, coefficients low to high (size degree+1).
  std::vector<mpq_class> modulus;
};
const CyclotomicData* cyclotomic_data(int n);
}  // namespace detail

/// Ground field descriptor. Cheap to copy; equality is structural.
class Field {
 public:
  static Field rational();
  /// Throws InvalidInput unless p is a prime below 2^31.
  static Field prime(std::int64_t p);
  /// Q(zeta_n), arithmetic modulo the n-th cyclotomic polynomial.
  static Field cyclotomic(int n);

  FieldKind kind() const noexcept { return kind_; }
  std::int64_t characteristic() const noexcept { return kind_ == FieldKind::Prime ? param_ : 0; }
  /// p for prime fields, n for cyclotomic fields, 0 for Q.
  std::int64_t param() const noexcept { return param_; }
  /// Dimension over the prime field representation (phi(n) for cyclotomic, else 1).
  int degree() const noexcept;
  const detail::CyclotomicData* cyclotomic() const noexcept { return cyc_; }

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.kind_ == b.kind_ && a.param_ == b.param_;
  }

 private:
  Field(FieldKind k, std::int64_t p, const detail::CyclotomicData* c) : kind_(k), param_(p), cyc_(c) {}

  FieldKind kind_ = FieldKind::Rational;
  std::int64_t param_ = 0;
  const detail::CyclotomicData* cyc_ = nullptr;
};

/// An element of a Field in canonical form: a reduced fraction, a residue in
/// [0, p), or a coefficient vector of length phi(n) reduced modulo Phi_n.
/// Equal values have equal representations.
class Scalar {
 public:
  explicit Scalar(Field f);
  Scalar(Field f, long v);
  Scalar(Field f, const mpq_class& v);

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return Scalar(f, 1L); }
  /// Canonical primitive n-th root of unity in Q(zeta_n) (the class of x).
  static Scalar zeta(Field f);
  /// Element of Q(zeta_n) from its coefficient vector (any length; reduced).
  static Scalar from_coefficients(Field f, const std::vector<mpq_class>& coeffs);
  /// Inverse of to_string; also accepts fractions over GF(p). Throws InvalidInput.
  static Scalar parse(Field f, const std::string& text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Coefficients over Q (length 1 for Q, phi(n) for cyclotomic).
  const std::vector<mpq_class>& coefficients() const noexcept { return q_; }
  std::int64_t residue() const noexcept { return r_; }
  /// Returns the value as a rational when it lies in the prime subfield image.
  bool is_rational() const noexcept;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  /// this += a * b, without a temporary for the common rational/prime case.
  void add_product(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  Scalar pow(long e) const;

  /// Human-readable form: "a/b", residue, or "[c0,c1,...]".
  std::string to_string() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void check_same(const Scalar& o) const;
  void reduce_cyclotomic(std::vector<mpq_class>& poly);

  Field field_;
  std::vector<mpq_class> q_;
  std::int64_t r_ = 0;
};

bool is_prime(std::int64_t p);

}  // namespace hopflab
