#pragma once

// Dense univariate polynomials over Q and cyclotomic helpers.  Polynomials are
// coefficient vectors in ascending degree with no trailing zeros; the empty
// vector is the zero polynomial.

#include <gmpxx.h>

#include <vector>

namespace tqft::poly {

using Rational = mpq_class;
using Poly = std::vector<Rational>;

void trim(Poly& a);
int degree(const Poly& a);  // -1 for zero
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
/// a = q*b + r with deg r < deg b. b must be nonzero.
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
/// Returns g = gcd(a, b) (monic) and s with s*a == g mod b.
Poly gcdext(const Poly& a, const Poly& b, Poly& s);

/// Phi_d(x), the d-th cyclotomic polynomial (integer coefficients). Cached.
const Poly& cyclotomic(int d);
/// Phi_d(x^4), as a polynomial in x. Cached.
const Poly& cyclotomic_quartic(int d);
/// Euler's totient.
int totient(int d);

}  // namespace tqft::poly
