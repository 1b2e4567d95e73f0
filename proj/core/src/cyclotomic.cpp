#include "tqft/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace tqft::poly {

void trim(Poly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  r = a;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) {
    q.clear();
    return;
  }
  q.assign(static_cast<size_t>(degree(r) - db + 1), Rational(0));
  const Rational lead = b.back();
  for (int k = degree(r); k >= db; --k) {
    if (sgn(r[static_cast<size_t>(k)]) == 0) continue;
    Rational c = r[static_cast<size_t>(k)] / lead;
    q[static_cast<size_t>(k - db)] = c;
    for (int t = 0; t <= db; ++t) r[static_cast<size_t>(k - db + t)] -= c * b[static_cast<size_t>(t)];
  }
  trim(q);
  trim(r);
}

Poly gcdext(const Poly& a, const Poly& b, Poly& s) {
  Poly r0 = a, r1 = b, s0{Rational(1)}, s1{};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (!r0.empty()) {
    Rational lead = r0.back();
    for (auto& c : r0) c /= lead;
    for (auto& c : s0) c /= lead;
  }
  s = std::move(s0);
  return r0;
}

int totient(int d) {
  int result = d, n = d;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      while (n % f == 0) n /= f;
      result -= result / f;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::mutex g_cache_mutex;
std::map<int, Poly> g_cyclo;
std::map<int, Poly> g_cyclo4;

Poly compute_cyclotomic(int d) {
  // x^d - 1 divided by Phi_k for every proper divisor k.
  Poly num(static_cast<size_t>(d) + 1);
  num[0] = -1;
  num[static_cast<size_t>(d)] = 1;
  for (int k = 1; k < d; ++k) {
    if (d % k != 0) continue;
    Poly q, r;
    divmod(num, compute_cyclotomic(k), q, r);
    num = std::move(q);
  }
  return num;
}

}  // namespace

const Poly& cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
  std::lock_guard lock(g_cache_mutex);
  auto it = g_cyclo.find(d);
  if (it == g_cyclo.end()) it = g_cyclo.emplace(d, compute_cyclotomic(d)).first;
  return it->second;
}

const Poly& cyclotomic_quartic(int d) {
  const Poly& base = cyclotomic(d);
  std::lock_guard lock(g_cache_mutex);
  auto it = g_cyclo4.find(d);
  if (it == g_cyclo4.end()) {
    Poly q(4 * base.size() - 3);
    for (size_t k = 0; k < base.size(); ++k) q[4 * k] = base[k];
    it = g_cyclo4.emplace(d, std::move(q)).first;
  }
  return it->second;
}

}  // namespace tqft::poly
