#include "tqft/tl_oracle.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace tqft {

namespace {

/// Union of two partial matchings `a` and `b` on the same node set (entries
/// are -1 where a node has no edge of that type).  Every node has one or two
/// edges.  Returns the pairing induced on degree-one nodes (-1 elsewhere) and
/// the number of closed cycles.
std::pair<std::vector<int>, int> trace(const std::vector<int>& a, const std::vector<int>& b) {
  const size_t n = a.size();
  std::vector<int> out(n, -1);
  std::vector<char> seen(n, 0);
  for (size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    const bool has_a = a[start] >= 0, has_b = b[start] >= 0;
    if (has_a == has_b) continue;
    seen[start] = 1;
    int cur = static_cast<int>(start);
    bool via_a = has_a;
    for (;;) {
      int next = via_a ? a[static_cast<size_t>(cur)] : b[static_cast<size_t>(cur)];
      seen[static_cast<size_t>(next)] = 1;
      const int other = via_a ? b[static_cast<size_t>(next)] : a[static_cast<size_t>(next)];
      if (other < 0) {
        out[start] = next;
        out[static_cast<size_t>(next)] = static_cast<int>(start);
        break;
      }
      cur = next;
      via_a = !via_a;
    }
  }
  int loops = 0;
  for (size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++loops;
    int cur = static_cast<int>(start);
    bool via_a = true;
    do {
      seen[static_cast<size_t>(cur)] = 1;
      cur = via_a ? a[static_cast<size_t>(cur)] : b[static_cast<size_t>(cur)];
      via_a = !via_a;
    } while (cur != static_cast<int>(start));
  }
  return {out, loops};
}

Scalar loop_scalar(const RingSpec& ring) {
  const Rational m1(-1);
  return Scalar::monomial(ring, 2, m1) + Scalar::monomial(ring, -2, m1);
}

Scalar loop_power(const RingSpec& ring, int k) {
  Scalar r = Scalar::one(ring);
  const Scalar d = loop_scalar(ring);
  for (int i = 0; i < k; ++i) r *= d;
  return r;
}

bool admissible(int i, int j, int k, const RingSpec& ring) {
  if (i < 0 || j < 0 || k < 0) return false;
  if ((i + j + k) % 2) return false;
  if (k > i + j || i > j + k || j > i + k) return false;
  if (ring.is_root_of_unity()) {
    const int p = ring.p();
    if (i > p - 2 || j > p - 2 || k > p - 2 || i + j + k > 2 * p - 4) return false;
  }
  return true;
}

/// Partner vectors of the current strand ends, with coefficients.
using State = std::map<std::vector<int>, Fraction>;

void accumulate(State& s, std::vector<int> key, const Fraction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = s.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
}

void check_range(int pos, int n, size_t width, const char* what) {
  if (pos < 0 || n < 0 || static_cast<size_t>(pos + n) > width)
    throw std::invalid_argument(std::string(what) + " out of range of the current strands");
}

State apply_cup(const State& s, int pos) {
  State r;
  for (const auto& [partner, c] : s) {
    check_range(pos, 0, partner.size(), "cup");
    std::vector<int> np;
    np.reserve(partner.size() + 2);
    auto shift = [pos](int x) { return x >= pos ? x + 2 : x; };
    for (size_t k = 0; k < partner.size(); ++k) {
      if (static_cast<int>(k) == pos) {
        np.push_back(pos + 1);
        np.push_back(pos);
      }
      np.push_back(shift(partner[k]));
    }
    if (static_cast<size_t>(pos) == partner.size()) {
      np.push_back(pos + 1);
      np.push_back(pos);
    }
    accumulate(r, std::move(np), c);
  }
  return r;
}

State apply_cap(const State& s, int pos, const Scalar& delta) {
  State r;
  for (const auto& [partner, c] : s) {
    check_range(pos, 2, partner.size(), "cap");
    std::vector<int> p = partner;
    const int x = p[static_cast<size_t>(pos)], y = p[static_cast<size_t>(pos + 1)];
    Fraction coeff = c;
    if (x == pos + 1) {
      coeff *= Fraction(delta);
    } else {
      p[static_cast<size_t>(x)] = y;
      p[static_cast<size_t>(y)] = x;
    }
    std::vector<int> np;
    np.reserve(p.size() - 2);
    for (size_t k = 0; k < p.size(); ++k) {
      if (static_cast<int>(k) == pos || static_cast<int>(k) == pos + 1) continue;
      const int t = p[k];
      np.push_back(t > pos + 1 ? t - 2 : t);
    }
    accumulate(r, std::move(np), coeff);
  }
  return r;
}

/// Glues a TL element below strands pos..pos+n-1.
State apply_tl(const State& s, int pos, const TLElement& x) {
  const int n = x.strands();
  State r;
  for (const auto& [partner, c] : s) {
    const int w = static_cast<int>(partner.size());
    check_range(pos, n, partner.size(), "projector");
    for (const auto& [m, xc] : x.terms()) {
      std::vector<int> a(static_cast<size_t>(w + n), -1), b(static_cast<size_t>(w + n), -1);
      for (int k = 0; k < w; ++k) a[static_cast<size_t>(k)] = partner[static_cast<size_t>(k)];
      auto node = [&](int point) { return point < n ? pos + point : w + (point - n); };
      for (int q = 0; q < 2 * n; ++q) b[static_cast<size_t>(node(q))] = node(m[static_cast<size_t>(q)]);
      auto [paired, loops] = trace(a, b);
      // new ordering: 0..pos-1, outputs, pos+n..w-1
      std::vector<int> index(static_cast<size_t>(w + n), -1);
      for (int k = 0; k < pos; ++k) index[static_cast<size_t>(k)] = k;
      for (int k = 0; k < n; ++k) index[static_cast<size_t>(w + k)] = pos + k;
      for (int k = pos + n; k < w; ++k) index[static_cast<size_t>(k)] = k;
      std::vector<int> np(static_cast<size_t>(w));
      for (int v = 0; v < w + n; ++v) {
        const int iv = index[static_cast<size_t>(v)];
        if (iv < 0) continue;
        np[static_cast<size_t>(iv)] = index[static_cast<size_t>(paired[static_cast<size_t>(v)])];
      }
      accumulate(r, std::move(np), c * xc * Fraction(loop_power(x.ring(), loops)));
    }
  }
  return r;
}

State apply_cross(const State& s, int pos, bool positive, const RingSpec& ring, const Scalar& delta) {
  const Fraction a(Scalar::monomial(ring, 1));
  const Fraction ainv(Scalar::monomial(ring, -1));
  State smoothed = apply_cup(apply_cap(s, pos, delta), pos);
  State r;
  for (const auto& [k, c] : s) accumulate(r, k, c * (positive ? a : ainv));
  for (const auto& [k, c] : smoothed) accumulate(r, k, c * (positive ? ainv : a));
  return r;
}

State initial_state(const RingSpec& ring) {
  State s;
  s.emplace(std::vector<int>{}, Fraction::one(ring));
  return s;
}

Fraction closed_value(const State& s, const RingSpec& ring) {
  Fraction total = Fraction::zero(ring);
  for (const auto& [k, c] : s) {
    if (!k.empty()) throw std::invalid_argument("diagram is not closed: strands remain at the bottom");
    total += c;
  }
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------

TLElement TLElement::identity(const RingSpec& ring, int n) {
  TLElement t(ring, n);
  Matching m(static_cast<size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    m[static_cast<size_t>(k)] = n + k;
    m[static_cast<size_t>(n + k)] = k;
  }
  t.add_term(m, Fraction::one(ring));
  return t;
}

TLElement TLElement::generator(const RingSpec& ring, int n, int k) {
  if (k < 0 || k + 1 >= n) throw std::invalid_argument("generator index out of range");
  TLElement t(ring, n);
  Matching m(static_cast<size_t>(2 * n));
  for (int q = 0; q < n; ++q) {
    m[static_cast<size_t>(q)] = n + q;
    m[static_cast<size_t>(n + q)] = q;
  }
  m[static_cast<size_t>(k)] = k + 1;
  m[static_cast<size_t>(k + 1)] = k;
  m[static_cast<size_t>(n + k)] = n + k + 1;
  m[static_cast<size_t>(n + k + 1)] = n + k;
  t.add_term(m, Fraction::one(ring));
  return t;
}

Fraction TLElement::coefficient(const Matching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Fraction::zero(ring_) : it->second;
}

void TLElement::add_term(const Matching& m, const Fraction& c) {
  if (static_cast<int>(m.size()) != 2 * n_) throw std::invalid_argument("matching size does not match strand count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement& TLElement::operator+=(const TLElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("TL elements on different strand counts");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TLElement& TLElement::operator*=(const Fraction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

TLElement operator-(TLElement a, const TLElement& b) {
  TLElement nb = b;
  nb *= Fraction(-Scalar::one(b.ring()));
  return a += nb;
}

TLElement operator*(const TLElement& a, const TLElement& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("TL elements on different strand counts");
  const int n = a.n_;
  TLElement r(a.ring_, n);
  for (const auto& [mb, cb] : b.terms_)
    for (const auto& [ma, ca] : a.terms_) {
      // nodes: b inputs 0..n-1, middle n..2n-1, a outputs 2n..3n-1
      std::vector<int> eb(static_cast<size_t>(3 * n), -1), ea(static_cast<size_t>(3 * n), -1);
      for (int q = 0; q < 2 * n; ++q) eb[static_cast<size_t>(q)] = mb[static_cast<size_t>(q)];
      for (int q = 0; q < 2 * n; ++q) ea[static_cast<size_t>(n + q)] = n + ma[static_cast<size_t>(q)];
      auto [paired, loops] = trace(eb, ea);
      Matching m(static_cast<size_t>(2 * n));
      auto point = [n](int node) { return node < n ? node : node - n; };
      for (int q = 0; q < n; ++q) m[static_cast<size_t>(q)] = point(paired[static_cast<size_t>(q)]);
      for (int q = 0; q < n; ++q) m[static_cast<size_t>(n + q)] = point(paired[static_cast<size_t>(2 * n + q)]);
      r.add_term(m, ca * cb * Fraction(loop_power(a.ring_, loops)));
    }
  return r;
}

bool operator==(const TLElement& a, const TLElement& b) {
  if (a.n_ != b.n_) return false;
  return (a - b).is_zero();
}

TLElement TLElement::extended(int extra) const {
  const int n = n_ + extra;
  TLElement r(ring_, n);
  for (const auto& [m, c] : terms_) {
    Matching nm(static_cast<size_t>(2 * n));
    auto remap = [&](int q) { return q < n_ ? q : q - n_ + n; };
    for (int q = 0; q < 2 * n_; ++q) nm[static_cast<size_t>(remap(q))] = remap(m[static_cast<size_t>(q)]);
    for (int k = n_; k < n; ++k) {
      nm[static_cast<size_t>(k)] = n + k;
      nm[static_cast<size_t>(n + k)] = k;
    }
    r.add_term(nm, c);
  }
  return r;
}

const TLElement& jones_wenzl(int n, const RingSpec& ring) {
  if (n < 0) throw std::invalid_argument("projector size must be nonnegative");
  if (ring.is_root_of_unity() && n > ring.p() - 2)
    throw std::out_of_range("Jones-Wenzl projector f_" + std::to_string(n) + " needs n <= p-2 at " + ring.name());
  static std::mutex mu;
  static std::map<std::pair<RingSpec, int>, TLElement> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(ring, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  if (n <= 1) return cache.emplace(key, TLElement::identity(ring, n)).first->second;
  if (!cache.count({ring, 1})) cache.emplace(std::make_pair(ring, 1), TLElement::identity(ring, 1));
  int k = 1;
  while (k < n && cache.count({ring, k + 1})) ++k;
  for (; k < n; ++k) {
    // f_{k+1} = F + ([k]/[k+1]) F e_k F with F = f_k (x) 1
    const TLElement f = cache.at({ring, k}).extended(1);
    const TLElement e = TLElement::generator(ring, k + 1, k - 1);
    TLElement corr = f * e * f;
    corr *= (factored_quantum_integer(k) * factored_quantum_integer(k + 1).inverse()).to_fraction(ring);
    cache.emplace(std::make_pair(ring, k + 1), f + corr);
  }
  return cache.at(key);
}

// ---------------------------------------------------------------------------

int PlanarDiagram::crossing_count() const {
  int c = 0;
  for (const auto& op : ops) c += op.kind == DiagramOp::Kind::Cross;
  return c;
}

Fraction resolve_bracket(const PlanarDiagram& d, const RingSpec& ring) {
  if (d.boundary != 0) throw std::invalid_argument("open diagram: bracket needs a closed diagram");
  const Scalar delta = loop_scalar(ring);
  State s = initial_state(ring);
  for (const auto& op : d.ops) {
    switch (op.kind) {
      case DiagramOp::Kind::Cup:
        s = apply_cup(s, op.pos);
        break;
      case DiagramOp::Kind::Cap:
        s = apply_cap(s, op.pos, delta);
        break;
      case DiagramOp::Kind::Cross:
        s = apply_cross(s, op.pos, op.positive, ring, delta);
        break;
      case DiagramOp::Kind::Projector:
        s = apply_tl(s, op.pos, jones_wenzl(op.n, ring));
        break;
    }
    if (s.empty()) return Fraction::zero(ring);
  }
  return closed_value(s, ring);
}

// ---------------------------------------------------------------------------

int ColoredNetwork::strand_count() const {
  int created = 0, capped = 0;
  std::vector<int> bundles;
  for (const auto& op : ops) {
    const int nb = static_cast<int>(bundles.size());
    const bool pair_op = op.kind == NetworkOp::Kind::Cap || op.kind == NetworkOp::Kind::Merge;
    const int limit = op.kind == NetworkOp::Kind::Cup ? nb : pair_op ? nb - 2 : nb - 1;
    if (op.pos < 0 || op.pos > limit) return -1;
    const auto at = bundles.begin() + op.pos;
    switch (op.kind) {
      case NetworkOp::Kind::Cup:
        bundles.insert(at, {op.color, op.color});
        created += op.color;
        break;
      case NetworkOp::Kind::Cap:
        capped += *at;
        bundles.erase(at, at + 2);
        break;
      case NetworkOp::Kind::Split:
        *at = op.right;
        bundles.insert(at, op.left);
        created += op.left + op.right;
        break;
      case NetworkOp::Kind::Merge:
        bundles.erase(at + 1);
        bundles[static_cast<size_t>(op.pos)] = op.color;
        created += op.color;
        break;
    }
  }
  return created - capped;
}

ColoredNetwork ColoredNetwork::unknot(int c) { return {{NetworkOp::cup(0, c), NetworkOp::cap(0)}}; }

ColoredNetwork ColoredNetwork::theta(int a, int b, int c) {
  return {{NetworkOp::cup(0, a), NetworkOp::split(1, b, c), NetworkOp::merge(1, a), NetworkOp::cap(0)}};
}

ColoredNetwork ColoredNetwork::tetrahedron(int a, int b, int i, int c, int d, int j) {
  return {{NetworkOp::cup(0, i), NetworkOp::split(0, a, b), NetworkOp::split(2, c, d), NetworkOp::merge(1, j),
           NetworkOp::merge(1, a), NetworkOp::cap(0)}};
}

Fraction evaluate_network(const ColoredNetwork& g, const RingSpec& ring, int strand_bound) {
  const int count = g.strand_count();
  if (count < 0) throw std::invalid_argument("network program addresses a missing bundle");
  if (count > strand_bound)
    throw std::length_error("network expands to " + std::to_string(count) + " strands, above the strand bound " +
                            std::to_string(strand_bound));
  const Scalar delta = loop_scalar(ring);
  State s = initial_state(ring);
  std::vector<int> bundles;
  auto offset = [&](int pos) {
    int o = 0;
    for (int k = 0; k < pos; ++k) o += bundles[static_cast<size_t>(k)];
    return o;
  };
  auto project = [&](int start, int n) {
    if (n >= 2) s = apply_tl(s, start, jones_wenzl(n, ring));
  };
  for (const auto& op : g.ops) {
    const int o = offset(op.pos);
    switch (op.kind) {
      case NetworkOp::Kind::Cup: {
        if (op.color < 0) throw std::invalid_argument("negative color");
        if (ring.is_root_of_unity() && op.color > ring.max_color())
          throw std::invalid_argument("color " + std::to_string(op.color) + " exceeds p-2");
        for (int k = 0; k < op.color; ++k) s = apply_cup(s, o + k);
        project(o, op.color);
        bundles.insert(bundles.begin() + op.pos, {op.color, op.color});
        break;
      }
      case NetworkOp::Kind::Cap: {
        const int c = bundles[static_cast<size_t>(op.pos)];
        if (bundles[static_cast<size_t>(op.pos + 1)] != c)
          throw std::invalid_argument("cap joins bundles of different colors");
        for (int k = c - 1; k >= 0; --k) s = apply_cap(s, o + k, delta);
        bundles.erase(bundles.begin() + op.pos, bundles.begin() + op.pos + 2);
        break;
      }
      case NetworkOp::Kind::Split: {
        const int i = bundles[static_cast<size_t>(op.pos)], j = op.left, k = op.right;
        if (!admissible(i, j, k, ring))
          throw std::invalid_argument("inadmissible vertex (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ") at " + ring.name());
        const int x = (i + j - k) / 2, z = (j + k - i) / 2;
        for (int q = 0; q < z; ++q) s = apply_cup(s, o + x + q);
        project(o, j);
        project(o + j, k);
        bundles[static_cast<size_t>(op.pos)] = k;
        bundles.insert(bundles.begin() + op.pos, j);
        break;
      }
      case NetworkOp::Kind::Merge: {
        const int j = bundles[static_cast<size_t>(op.pos)], k = bundles[static_cast<size_t>(op.pos + 1)], i = op.color;
        if (!admissible(i, j, k, ring))
          throw std::invalid_argument("inadmissible vertex (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ") at " + ring.name());
        const int z = (j + k - i) / 2;
        for (int q = 1; q <= z; ++q) s = apply_cap(s, o + j - q, delta);
        project(o, i);
        bundles.erase(bundles.begin() + op.pos + 1);
        bundles[static_cast<size_t>(op.pos)] = i;
        break;
      }
    }
    if (s.empty()) return Fraction::zero(ring);
  }
  if (!bundles.empty()) throw std::invalid_argument("network program leaves open bundles");
  return closed_value(s, ring);
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const PlanarDiagram& d) {
  nlohmann::json ops = nlohmann::json::array();
  for (const auto& op : d.ops) {
    switch (op.kind) {
      case DiagramOp::Kind::Cup:
        ops.push_back({"cup", op.pos});
        break;
      case DiagramOp::Kind::Cap:
        ops.push_back({"cap", op.pos});
        break;
      case DiagramOp::Kind::Cross:
        ops.push_back({"cross", op.pos, op.positive ? "+" : "-"});
        break;
      case DiagramOp::Kind::Projector:
        ops.push_back({"proj", op.pos, op.n});
        break;
    }
  }
  return {{"boundary", d.boundary}, {"ops", ops}};
}

PlanarDiagram planar_diagram_from_json(const nlohmann::json& j) {
  PlanarDiagram d;
  d.boundary = j.value("boundary", 0);
  for (const auto& op : j.at("ops")) {
    const std::string name = op.at(0).get<std::string>();
    const int pos = op.at(1).get<int>();
    if (name == "cup")
      d.ops.push_back(DiagramOp::cup(pos));
    else if (name == "cap")
      d.ops.push_back(DiagramOp::cap(pos));
    else if (name == "cross")
      d.ops.push_back(DiagramOp::cross(pos, op.at(2).get<std::string>() == "+"));
    else if (name == "proj")
      d.ops.push_back(DiagramOp::projector(pos, op.at(2).get<int>()));
    else
      throw std::invalid_argument("unknown diagram op: " + name);
  }
  return d;
}

nlohmann::json to_json(const ColoredNetwork& g) {
  nlohmann::json ops = nlohmann::json::array();
  for (const auto& op : g.ops) {
    switch (op.kind) {
      case NetworkOp::Kind::Cup:
        ops.push_back({"cup", op.pos, op.color});
        break;
      case NetworkOp::Kind::Cap:
        ops.push_back({"cap", op.pos});
        break;
      case NetworkOp::Kind::Split:
        ops.push_back({"split", op.pos, op.left, op.right});
        break;
      case NetworkOp::Kind::Merge:
        ops.push_back({"merge", op.pos, op.color});
        break;
    }
  }
  return {{"ops", ops}};
}

ColoredNetwork colored_network_from_json(const nlohmann::json& j) {
  ColoredNetwork g;
  for (const auto& op : j.at("ops")) {
    const std::string name = op.at(0).get<std::string>();
    const int pos = op.at(1).get<int>();
    if (name == "cup")
      g.ops.push_back(NetworkOp::cup(pos, op.at(2).get<int>()));
    else if (name == "cap")
      g.ops.push_back(NetworkOp::cap(pos));
    else if (name == "split")
      g.ops.push_back(NetworkOp::split(pos, op.at(2).get<int>(), op.at(3).get<int>()));
    else if (name == "merge")
      g.ops.push_back(NetworkOp::merge(pos, op.at(2).get<int>()));
    else
      throw std::invalid_argument("unknown network op: " + name);
  }
  return g;
}

}  // namespace tqft
