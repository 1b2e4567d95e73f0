#include "tqft/fraction.hpp"

#include <sstream>

#include "tqft/cyclotomic.hpp"

namespace tqft {

namespace {

Scalar quartic_cyclotomic(const RingSpec& ring, int d) {
  return Scalar::from_laurent(ring, 0, poly::cyclotomic_quartic(d));
}

Scalar power(Scalar base, int e) {
  Scalar r = Scalar::one(base.ring());
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

/// Exact division of a generic Laurent polynomial by Phi_d(A^4); false if it
/// does not divide.
bool try_divide(Scalar& x, int d) {
  const poly::Poly& f = poly::cyclotomic_quartic(d);
  const auto& c = x.coefficients();
  if (static_cast<int>(c.size()) < static_cast<int>(f.size())) return false;
  poly::Poly q, r;
  poly::divmod(poly::Poly(c.begin(), c.end()), f, q, r);
  if (!r.empty()) return false;
  x = Scalar::from_laurent(x.ring(), x.low(), q);
  return true;
}

}  // namespace

Fraction::Fraction(Scalar numerator) : num_(std::move(numerator)) {}

Fraction::Fraction(Scalar numerator, Denominator denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

void Fraction::normalize() {
  if (num_.ring().is_root_of_unity()) {
    if (!den_.empty()) {
      num_ *= Scalar(denominator_value()).inverse();
      den_.clear();
    }
    return;
  }
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->second < 0) throw RingError("negative denominator exponent");
    while (it->second > 0 && try_divide(num_, it->first)) --it->second;
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

Scalar Fraction::denominator_value() const {
  Scalar r = Scalar::one(num_.ring());
  for (const auto& [d, e] : den_) r *= power(quartic_cyclotomic(num_.ring(), d), e);
  return r;
}

Scalar Fraction::to_scalar() const {
  if (!den_.empty()) throw RingError("value is not a Laurent polynomial: " + to_string());
  return num_;
}

Fraction Fraction::operator-() const {
  Fraction r = *this;
  r.num_ = -r.num_;
  return r;
}

Fraction& Fraction::operator+=(const Fraction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.empty() && o.den_.empty()) {
    num_ += o.num_;
    return *this;
  }
  Denominator common = den_;
  for (const auto& [d, e] : o.den_) common[d] = std::max(common[d], e);
  Scalar lhs = num_, rhs = o.num_;
  const RingSpec& ring = num_.ring();
  for (const auto& [d, e] : common) {
    auto a = den_.find(d);
    auto b = o.den_.find(d);
    const int ea = a == den_.end() ? 0 : a->second;
    const int eb = b == o.den_.end() ? 0 : b->second;
    if (e > ea) lhs *= power(quartic_cyclotomic(ring, d), e - ea);
    if (e > eb) rhs *= power(quartic_cyclotomic(ring, d), e - eb);
  }
  num_ = lhs + rhs;
  den_ = std::move(common);
  normalize();
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& o) { return *this += -o; }

Fraction& Fraction::operator*=(const Fraction& o) {
  num_ *= o.num_;
  for (const auto& [d, e] : o.den_) den_[d] += e;
  normalize();
  return *this;
}

bool operator==(const Fraction& a, const Fraction& b) {
  if (!(a.ring() == b.ring())) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return (a - b).is_zero();
}

Fraction Fraction::inverse() const {
  if (is_zero()) throw RingError("inverse of zero");
  const RingSpec& ring = num_.ring();
  if (ring.is_root_of_unity()) return Fraction(num_.inverse());
  // Strip cyclotomic factors from the numerator until a monomial remains.
  Scalar rest = num_;
  Denominator stripped;
  const int span = rest.leading_degree() - rest.trailing_degree();
  for (int d = 1; d <= 2 * span + 8 && rest.coefficients().size() > 1; ++d) {
    if (4 * poly::totient(d) > static_cast<int>(rest.coefficients().size()) - 1) continue;
    while (try_divide(rest, d)) ++stripped[d];
  }
  int k;
  Rational c;
  if (!rest.as_monomial(k, c)) throw RingError("not invertible in the localized ring: " + to_string());
  Scalar new_num = Scalar::monomial(ring, -k, 1 / c);
  for (const auto& [d, e] : den_) new_num *= power(quartic_cyclotomic(ring, d), e);
  return Fraction(std::move(new_num), std::move(stripped));
}

Fraction Fraction::substitute(const RingSpec& target) const {
  if (ring() == target) return *this;
  return Fraction(num_.substitute(target), den_);
}

std::string Fraction::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::ostringstream os;
  os << "(" << num_.to_string() << ") / (";
  bool first = true;
  for (const auto& [d, e] : den_) {
    if (!first) os << " * ";
    os << "Phi_" << d << "(A^4)";
    if (e != 1) os << "^" << e;
    first = false;
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

FactoredScalar& FactoredScalar::operator*=(const FactoredScalar& o) {
  coeff *= o.coeff;
  a_power += o.a_power;
  for (const auto& [d, e] : o.cyclo) {
    int& slot = cyclo[d];
    slot += e;
    if (slot == 0) cyclo.erase(d);
  }
  return *this;
}

FactoredScalar FactoredScalar::inverse() const {
  if (sgn(coeff) == 0) throw RingError("inverse of zero");
  FactoredScalar r;
  r.coeff = 1 / coeff;
  r.a_power = -a_power;
  for (const auto& [d, e] : cyclo) r.cyclo[d] = -e;
  return r;
}

Fraction FactoredScalar::to_fraction(const RingSpec& ring) const {
  Scalar num = Scalar::monomial(ring, a_power, coeff);
  Fraction::Denominator den;
  Scalar den_value = Scalar::one(ring);
  for (const auto& [d, e] : cyclo) {
    if (e > 0) {
      num *= power(quartic_cyclotomic(ring, d), e);
    } else if (ring.is_root_of_unity()) {
      den_value *= power(quartic_cyclotomic(ring, d), -e);
    } else {
      den[d] = -e;
    }
  }
  if (ring.is_root_of_unity()) {
    if (den_value.is_zero()) throw RingError("division by a vanishing quantum integer at " + ring.name());
    return Fraction(num * den_value.inverse());
  }
  return Fraction(std::move(num), std::move(den));
}

FactoredScalar factored_quantum_integer(int n) {
  if (n < 1) throw std::invalid_argument("factored quantum integer requires n >= 1");
  FactoredScalar r;
  r.a_power = 2 - 2 * n;
  for (int d = 2; d <= n; ++d)
    if (n % d == 0) r.cyclo[d] = 1;
  return r;
}

FactoredScalar factored_quantum_factorial(int n) {
  if (n < 0) throw std::invalid_argument("factored quantum factorial requires n >= 0");
  FactoredScalar r;
  r.a_power = n - n * n;
  for (int d = 2; d <= n; ++d) r.cyclo[d] = n / d;
  return r;
}

}  // namespace tqft
