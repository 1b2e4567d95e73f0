#include "tqft/recoupling.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace tqft {

namespace {

void require_admissible(int x, int y, int z, const RingSpec& ring, const char* what) {
  auto r = check_admissible_triple(x, y, z, ring);
  if (!r)
    throw std::invalid_argument(std::string(what) + ": inadmissible triple (" + std::to_string(x) + "," +
                                std::to_string(y) + "," + std::to_string(z) + ") at " + ring.name() + " [" +
                                to_string(r.reason) + "]");
}

FactoredScalar sign(int e) {
  FactoredScalar s;
  s.coeff = e % 2 ? -1 : 1;
  return s;
}

template <class Key>
class ValueCache {
 public:
  template <class F>
  Fraction get(const Key& k, F&& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = map_.find(k); it != map_.end()) return it->second;
    }
    Fraction v = compute();
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(k, std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, Fraction> map_;
};

}  // namespace

TetFrame TetFrame::make(int a, int b, int i, int c, int d, int j, const RingSpec& ring) {
  require_admissible(a, b, i, ring, "tet");
  require_admissible(a, d, j, ring, "tet");
  require_admissible(b, c, j, ring, "tet");
  require_admissible(c, d, i, ring, "tet");
  TetFrame f;
  f.a = a, f.b = b, f.i = i, f.c = c, f.d = d, f.j = j;
  f.m = {(a + b + i) / 2, (a + d + j) / 2, (b + c + j) / 2, (i + d + c) / 2};
  f.n = {(a + b + c + d) / 2, (b + i + d + j) / 2, (a + i + c + j) / 2};
  f.z_min = *std::max_element(f.m.begin(), f.m.end());
  f.z_max = *std::min_element(f.n.begin(), f.n.end());
  return f;
}

FactoredScalar TetFrame::summand(int z) const {
  FactoredScalar num = sign(z) * factored_quantum_factorial(z + 1);
  for (int s : n)
    for (int t : m) num *= factored_quantum_factorial(s - t);
  FactoredScalar den;
  for (int x : {a, b, c, d, i, j}) den *= factored_quantum_factorial(x);
  for (int s : n) den *= factored_quantum_factorial(s - z);
  for (int t : m) den *= factored_quantum_factorial(z - t);
  return num * den.inverse();
}

Fraction theta(int a, int b, int c, const RingSpec& ring) {
  require_admissible(a, b, c, ring, "theta");
  static ValueCache<std::tuple<RingSpec, int, int, int>> cache;
  return cache.get({ring, a, b, c}, [&] {
    const int m = (a + b - c) / 2, n = (b + c - a) / 2, k = (a + c - b) / 2;
    FactoredScalar num = sign(m + n + k) * factored_quantum_factorial(m + n + k + 1) * factored_quantum_factorial(m) *
                         factored_quantum_factorial(n) * factored_quantum_factorial(k);
    FactoredScalar den =
        factored_quantum_factorial(m + n) * factored_quantum_factorial(n + k) * factored_quantum_factorial(m + k);
    return (num * den.inverse()).to_fraction(ring);
  });
}

Fraction tet(int a, int b, int i, int c, int d, int j, const RingSpec& ring) {
  const TetFrame f = TetFrame::make(a, b, i, c, d, j, ring);
  static ValueCache<std::tuple<RingSpec, int, int, int, int, int, int>> cache;
  return cache.get({ring, a, b, i, c, d, j}, [&] {
    Fraction total = Fraction::zero(ring);
    for (int z = f.z_min; z <= f.z_max; ++z) total += f.summand(z).to_fraction(ring);
    return total;
  });
}

Fraction sixj(int a, int b, int i, int c, int d, int j, const RingSpec& ring) {
  require_admissible(a, b, i, ring, "sixj source");
  require_admissible(c, d, i, ring, "sixj source");
  require_admissible(a, d, j, ring, "sixj target");
  require_admissible(b, c, j, ring, "sixj target");
  const Fraction t1 = theta(a, d, j, ring), t2 = theta(b, c, j, ring);
  if (t1.is_zero() || t2.is_zero()) throw RingError("vanishing theta in 6j denominator");
  return Fraction(loop_value(j, ring)) * tet(a, b, i, c, d, j, ring) * (t1 * t2).inverse();
}

namespace {

std::vector<int> pair_colors(int x1, int y1, int x2, int y2, const RingSpec& ring) {
  std::vector<int> out;
  const int lo = std::max(std::abs(x1 - y1), std::abs(x2 - y2));
  const int hi = std::min(x1 + y1, x2 + y2);
  for (int k = lo; k <= hi; ++k)
    if (is_admissible_triple(x1, y1, k, ring) && is_admissible_triple(x2, y2, k, ring)) out.push_back(k);
  return out;
}

}  // namespace

std::vector<int> v_basis_colors(int a, int b, int c, int d, const RingSpec& ring) {
  return pair_colors(a, b, c, d, ring);
}

std::vector<int> w_basis_colors(int a, int b, int c, int d, const RingSpec& ring) {
  return pair_colors(a, d, b, c, ring);
}

RingMatrix fusion_matrix(int a, int b, int c, int d, const RingSpec& ring) {
  const auto is = v_basis_colors(a, b, c, d, ring);
  const auto js = w_basis_colors(a, b, c, d, ring);
  if (is.empty() || js.empty())
    throw std::invalid_argument("zero-dimensional space V(0,4; " + std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + "," + std::to_string(d) + ") at " + ring.name());
  if (is.size() != js.size()) throw std::logic_error("fusion bases of different sizes");
  RingMatrix f(ring, js.size(), is.size());
  for (size_t r = 0; r < js.size(); ++r) {
    f.row_labels.push_back("w" + std::to_string(js[r]));
    for (size_t col = 0; col < is.size(); ++col) f(r, col) = sixj(a, b, is[col], c, d, js[r], ring);
  }
  for (int i : is) f.col_labels.push_back("v" + std::to_string(i));
  return f;
}

}  // namespace tqft
