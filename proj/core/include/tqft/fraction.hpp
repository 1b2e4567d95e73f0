#pragma once

// Fractions whose denominators are products of Phi_d(A^4).
//
// Every quantum integer factors as [n] = A^{2-2n} * prod_{d | n, d > 1} Phi_d(A^4),
// so theta nets, 6j symbols and fusion matrices all live in the localization
// of Q[A, A^{-1}] at the multiplicative set generated by the Phi_d(A^4).  At a
// root of unity the ring is already a field and the denominator stays empty.

#include <map>
#include <string>

#include "tqft/scalar.hpp"

namespace tqft {

class Fraction {
 public:
  /// Map from cyclotomic index d to the exponent of Phi_d(A^4).
  using Denominator = std::map<int, int>;

  Fraction() = default;
  Fraction(Scalar numerator);  // NOLINT(google-explicit-constructor): scalars embed
  Fraction(Scalar numerator, Denominator denominator);

  static Fraction zero(const RingSpec& ring) { return Fraction(Scalar::zero(ring)); }
  static Fraction one(const RingSpec& ring) { return Fraction(Scalar::one(ring)); }

  const RingSpec& ring() const { return num_.ring(); }
  const Scalar& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  /// Expanded product of the denominator factors.
  Scalar denominator_value() const;

  bool is_zero() const { return num_.is_zero(); }
  /// True when the value is a Laurent polynomial (or field element).
  bool is_scalar() const { return den_.empty(); }
  /// Throws RingError unless is_scalar().
  Scalar to_scalar() const;

  Fraction operator-() const;
  Fraction& operator+=(const Fraction& o);
  Fraction& operator-=(const Fraction& o);
  Fraction& operator*=(const Fraction& o);
  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  /// Value equality (representations are not unique).
  friend bool operator==(const Fraction& a, const Fraction& b);
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

  /// Throws RingError when the value is zero or (generic mode) when the
  /// numerator is not c * A^k times a product of Phi_d(A^4).
  Fraction inverse() const;
  Fraction substitute(const RingSpec& target) const;

  std::string to_string() const;

 private:
  void normalize();

  Scalar num_;
  Denominator den_;
};

/// c * A^k * prod_d Phi_d(A^4)^{e_d} with exponents of either sign.  Used to
/// assemble products and quotients of quantum factorials without expanding.
struct FactoredScalar {
  Rational coeff = 1;
  int a_power = 0;
  std::map<int, int> cyclo;

  FactoredScalar& operator*=(const FactoredScalar& o);
  friend FactoredScalar operator*(FactoredScalar a, const FactoredScalar& b) { return a *= b; }
  FactoredScalar inverse() const;
  Fraction to_fraction(const RingSpec& ring) const;
};

/// [n] for n >= 1.
FactoredScalar factored_quantum_integer(int n);
/// [n]! for n >= 0.
FactoredScalar factored_quantum_factorial(int n);

}  // namespace tqft
