#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bggkit {

using Rational = mpq_class;

/// Euler phi.
int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int n);

/// An element of Q(zeta_e), stored in the power basis 1, zeta, ..., zeta^(phi(e)-1).
///
/// Values of different orders can be mixed freely: binary operations embed
/// both operands into Q(zeta_lcm). Results are never shrunk back to a
/// smaller order, so `order()` is a property of the representation, not of
/// the value; use `operator==` for value comparison.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(const Rational& value, int order = 1);
  Cyclotomic(int order, std::vector<Rational> coeffs);

  /// zeta_e^k.
  static Cyclotomic root_of_unity(int e, long k);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same value written over Q(zeta_e); requires order() | e.
  Cyclotomic in_order(int e) const;

  /// Galois automorphism zeta -> zeta^-1 (complex conjugation).
  Cyclotomic conjugate() const;
  /// Galois automorphism zeta_e -> zeta_e^k, gcd(k, e) = 1.
  Cyclotomic galois(long k) const;

  bool is_zero() const;
  bool is_rational() const;
  /// Value as a rational, if rational.
  std::optional<Rational> rational_value() const;
  /// Value as an integer, if it is one.
  std::optional<std::int64_t> integer_value() const;
  /// Some k with value == zeta_order^k, if the value is a root of unity of
  /// the representation's order.
  std::optional<int> root_exponent() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// e.g. "1 + 2*z12^3 - z12^5"; debug/printing only.
  std::string to_string() const;

 private:
  int order_ = 1;
  std::vector<Rational> coeffs_;  // size euler_phi(order_)
};

/// cyc_primitive_root(e, k).
inline Cyclotomic cyc_primitive_root(int e, long k) { return Cyclotomic::root_of_unity(e, k); }
inline Cyclotomic cyc_conjugate(const Cyclotomic& z) { return z.conjugate(); }

}  // namespace bggkit
