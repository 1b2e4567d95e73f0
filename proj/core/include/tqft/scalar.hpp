#pragma once

// Exact coefficient rings.
//
// A Scalar lives in one of two rings, selected by RingSpec:
//   * RootOfUnity(p): Q(zeta_{4p}), A = zeta_{4p}, stored densely in the power
//     basis 1, A, ..., A^{phi(4p)-1} reduced modulo the 4p-th cyclotomic
//     polynomial.
//   * Generic: Laurent polynomials Q[A, A^{-1}] (A transcendental).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tqft {

using Rational = mpq_class;

enum class RingMode { RootOfUnity, Generic };

/// Raised when an exact operation has no answer in the ring (division by
/// zero, inverting a non-unit, degree of zero, ...).
class RingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_prime(int n);

class RingSpec {
 public:
  /// Default is the generic (transcendental A) ring.
  constexpr RingSpec() = default;

  static RingSpec generic() { return RingSpec(); }
  /// Throws std::invalid_argument unless p is an odd prime >= 5.
  static RingSpec root_of_unity(int p);

  RingMode mode() const { return mode_; }
  bool is_root_of_unity() const { return mode_ == RingMode::RootOfUnity; }
  bool is_generic() const { return mode_ == RingMode::Generic; }
  /// Level p; 0 in generic mode.
  int p() const { return p_; }
  /// phi(4p) = 2(p-1); 0 in generic mode.
  int field_degree() const { return is_root_of_unity() ? 2 * (p_ - 1) : 0; }
  /// Largest admissible color: p-2 at a root of unity, unbounded otherwise.
  int max_color() const;

  std::string name() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
  friend auto operator<=>(const RingSpec&, const RingSpec&) = default;

 private:
  constexpr RingSpec(RingMode m, int p) : mode_(m), p_(p) {}
  RingMode mode_ = RingMode::Generic;
  int p_ = 0;
};

class Scalar {
 public:
  /// Zero of the generic ring.
  Scalar() = default;
  explicit Scalar(const RingSpec& ring) : ring_(ring) { canonicalize_zero(); }

  static Scalar zero(const RingSpec& ring) { return Scalar(ring); }
  static Scalar one(const RingSpec& ring) { return constant(ring, 1); }
  static Scalar constant(const RingSpec& ring, const Rational& c);
  /// c * A^k, any integer k.
  static Scalar monomial(const RingSpec& ring, int k, const Rational& c = 1);
  /// Builds sum_k coeffs[k] * A^(low + k) and reduces it into `ring`.
  static Scalar from_laurent(const RingSpec& ring, int low, std::span<const Rational> coeffs);

  const RingSpec& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const Rational& c);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator*(Scalar a, const Rational& c) { return a *= c; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Multiplicative inverse. Root of unity: any nonzero element. Generic:
  /// only monomials c*A^k are units.
  Scalar inverse() const;

  /// Multiplies by A^k.
  Scalar shifted(int k) const;

  /// Largest exponent with nonzero coefficient (generic mode only).
  int leading_degree() const;
  /// Smallest exponent with nonzero coefficient (generic mode only).
  int trailing_degree() const;
  /// Returns (k, c) when the element is c*A^k with c != 0.
  bool as_monomial(int& k, Rational& c) const;

  /// Generic -> RootOfUnity(p) by A |-> zeta_{4p}. Identity when the rings agree.
  Scalar substitute(const RingSpec& target) const;

  /// Coefficient view.  Generic: coefficient of A^(low()+k); root of unity:
  /// coefficient of A^k in the reduced power basis (low() == 0).
  int low() const { return low_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  std::string to_string() const;

 private:
  void canonicalize_zero();
  void trim();
  void reduce_from(int low, std::vector<Rational> raw);

  RingSpec ring_;
  int low_ = 0;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

/// A^2 + A^{-2} style quantum integer [i] = (A^{2i} - A^{-2i}) / (A^2 - A^{-2}),
/// returned in expanded form A^{2(i-1)} + A^{2(i-3)} + ... + A^{-2(i-1)}.
Scalar quantum_integer(int i, const RingSpec& ring);
/// [1][2]...[n]; [0]! = 1.
Scalar quantum_factorial(int n, const RingSpec& ring);
/// Value of the unknot colored c: (-1)^c [c+1].
Scalar loop_value(int c, const RingSpec& ring);

}  // namespace tqft
