#include "tqft/scalar.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include "tqft/cyclotomic.hpp"

namespace tqft {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

RingSpec RingSpec::root_of_unity(int p) {
  if (p < 5 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("root-of-unity level must be an odd prime >= 5, got " + std::to_string(p));
  return RingSpec(RingMode::RootOfUnity, p);
}

int RingSpec::max_color() const { return is_root_of_unity() ? p_ - 2 : std::numeric_limits<int>::max(); }

std::string RingSpec::name() const { return is_root_of_unity() ? "p=" + std::to_string(p_) : "generic"; }

// ---------------------------------------------------------------------------

void Scalar::canonicalize_zero() {
  low_ = 0;
  if (ring_.is_root_of_unity())
    coeffs_.assign(static_cast<size_t>(ring_.field_degree()), Rational(0));
  else
    coeffs_.clear();
}

void Scalar::trim() {
  if (ring_.is_root_of_unity()) return;
  size_t first = 0;
  while (first < coeffs_.size() && sgn(coeffs_[first]) == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (first > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
  while (sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

void Scalar::reduce_from(int low, std::vector<Rational> raw) {
  for (auto& c : raw) c.canonicalize();
  if (ring_.is_generic()) {
    low_ = low;
    coeffs_ = std::move(raw);
    trim();
    return;
  }
  const int p = ring_.p();
  const int period = 4 * p, half = 2 * p, deg = ring_.field_degree();
  std::vector<Rational> acc(static_cast<size_t>(half));
  for (size_t k = 0; k < raw.size(); ++k) {
    if (sgn(raw[k]) == 0) continue;
    int e = ((low + static_cast<int>(k)) % period + period) % period;
    if (e >= half)
      acc[static_cast<size_t>(e - half)] -= raw[k];
    else
      acc[static_cast<size_t>(e)] += raw[k];
  }
  // A^{2p-2} = -sum_{k=0}^{p-2} (-1)^k A^{2k}
  for (int m = half - 1; m >= deg; --m) {
    Rational c = acc[static_cast<size_t>(m)];
    if (sgn(c) == 0) continue;
    acc[static_cast<size_t>(m)] = 0;
    const int s = m - deg;
    for (int k = 0; k <= p - 2; ++k) {
      if (k % 2 == 0)
        acc[static_cast<size_t>(s + 2 * k)] -= c;
      else
        acc[static_cast<size_t>(s + 2 * k)] += c;
    }
  }
  acc.resize(static_cast<size_t>(deg));
  low_ = 0;
  coeffs_ = std::move(acc);
}

Scalar Scalar::constant(const RingSpec& ring, const Rational& c) { return monomial(ring, 0, c); }

Scalar Scalar::monomial(const RingSpec& ring, int k, const Rational& c) {
  Scalar s(ring);
  if (sgn(c) == 0) return s;
  s.reduce_from(k, {c});
  return s;
}

Scalar Scalar::from_laurent(const RingSpec& ring, int low, std::span<const Rational> coeffs) {
  Scalar s(ring);
  s.reduce_from(low, std::vector<Rational>(coeffs.begin(), coeffs.end()));
  return s;
}

bool Scalar::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool Scalar::is_one() const { return *this == one(ring_); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

void require_same_ring(const RingSpec& a, const RingSpec& b) {
  if (!(a == b)) throw RingError("scalars from different rings: " + a.name() + " vs " + b.name());
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_ring(ring_, o.ring_);
  if (o.coeffs_.empty()) return *this;
  if (ring_.is_root_of_unity()) {
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  if (coeffs_.empty()) {
    *this = o;
    return *this;
  }
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(low_ + static_cast<int>(coeffs_.size()), o.low_ + static_cast<int>(o.coeffs_.size()));
  std::vector<Rational> r(static_cast<size_t>(hi - lo));
  for (size_t k = 0; k < coeffs_.size(); ++k) r[static_cast<size_t>(low_ - lo) + k] += coeffs_[k];
  for (size_t k = 0; k < o.coeffs_.size(); ++k) r[static_cast<size_t>(o.low_ - lo) + k] += o.coeffs_[k];
  low_ = lo;
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_ring(a.ring_, b.ring_);
  Scalar r(a.ring_);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
  std::vector<Rational> raw(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.reduce_from(a.low_ + b.low_, std::move(raw));
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar& Scalar::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    canonicalize_zero();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.ring_ == b.ring_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

bool Scalar::as_monomial(int& k, Rational& c) const {
  if (ring_.is_root_of_unity()) {
    int found = -1;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) == 0) continue;
      if (found >= 0) return false;
      found = static_cast<int>(i);
    }
    if (found < 0) return false;
    k = found;
    c = coeffs_[static_cast<size_t>(found)];
    return true;
  }
  if (coeffs_.size() != 1) return false;
  k = low_;
  c = coeffs_[0];
  return true;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw RingError("inverse of zero");
  if (ring_.is_generic()) {
    int k;
    Rational c;
    if (!as_monomial(k, c)) throw RingError("not a unit in this ring: " + to_string());
    return monomial(ring_, -k, 1 / c);
  }
  poly::Poly a(coeffs_.begin(), coeffs_.end());
  poly::trim(a);
  poly::Poly s;
  poly::Poly g = poly::gcdext(a, poly::cyclotomic(4 * ring_.p()), s);
  if (poly::degree(g) != 0) throw RingError("element is not invertible: " + to_string());
  return from_laurent(ring_, 0, s);
}

Scalar Scalar::shifted(int k) const {
  if (coeffs_.empty()) return *this;
  if (ring_.is_generic()) {
    Scalar r = *this;
    r.low_ += k;
    return r;
  }
  Scalar r(ring_);
  r.reduce_from(low_ + k, coeffs_);
  return r;
}

int Scalar::leading_degree() const {
  if (ring_.is_root_of_unity()) throw RingError("degree undefined at root of unity");
  if (coeffs_.empty()) throw RingError("degree of zero");
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

int Scalar::trailing_degree() const {
  if (ring_.is_root_of_unity()) throw RingError("degree undefined at root of unity");
  if (coeffs_.empty()) throw RingError("degree of zero");
  return low_;
}

Scalar Scalar::substitute(const RingSpec& target) const {
  if (ring_ == target) return *this;
  if (!ring_.is_generic() || !target.is_root_of_unity())
    throw RingError("substitution only maps the generic ring into a root-of-unity ring");
  return from_laurent(target, low_, coeffs_);
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const int e = low_ + static_cast<int>(k);
    Rational mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (e == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "A";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// ---------------------------------------------------------------------------

Scalar quantum_integer(int i, const RingSpec& ring) {
  if (i < 0) throw std::invalid_argument("quantum_integer requires i >= 0");
  if (i == 0) return Scalar::zero(ring);
  // exponents 2(i-1), 2(i-3), ..., -2(i-1): step 4
  const int low = -2 * (i - 1);
  std::vector<Rational> raw(static_cast<size_t>(4 * (i - 1) + 1));
  for (int k = 0; k < i; ++k) raw[static_cast<size_t>(4 * k)] = 1;
  return Scalar::from_laurent(ring, low, raw);
}

Scalar quantum_factorial(int n, const RingSpec& ring) {
  if (n < 0) throw std::invalid_argument("quantum_factorial requires n >= 0");
  Scalar r = Scalar::one(ring);
  for (int k = 2; k <= n; ++k) r *= quantum_integer(k, ring);
  return r;
}

Scalar loop_value(int c, const RingSpec& ring) {
  if (c < 0) throw std::invalid_argument("color must be nonnegative");
  if (ring.is_root_of_unity() && c > ring.max_color())
    throw std::out_of_range("color " + std::to_string(c) + " exceeds p-2 at " + ring.name());
  Scalar q = quantum_integer(c + 1, ring);
  return c % 2 == 0 ? q : -q;
}

}  // namespace tqft
