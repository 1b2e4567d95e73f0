#include "tqft/mcg_action.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "tqft/recoupling.hpp"

namespace tqft {

Scalar twist_eigenvalue(int c, const RingSpec& ring) {
  if (c < 0) throw std::invalid_argument("color must be nonnegative");
  return Scalar::monomial(ring, c * (c + 2), c % 2 ? -1 : 1);
}

TwistEigenvalue TwistEigenvalue::of(int c, const RingSpec& ring) { return {c, twist_eigenvalue(c, ring)}; }

OmegaCoefficients omega_coefficients(int p) { return omega_coefficients(RingSpec::root_of_unity(p)); }

OmegaCoefficients omega_coefficients(const RingSpec& ring) {
  if (!ring.is_root_of_unity()) throw std::domain_error("the Omega color is only defined at a root of unity");
  OmegaCoefficients out;
  for (int i = 0; i <= ring.max_color(); ++i) out.terms.emplace_back(i, loop_value(i, ring));
  out.note = "global factor sqrt(2/p)*sin(pi/p) omitted (central scalar, outside the exact ring)";
  return out;
}

namespace {

std::string coloring_label(const std::vector<int>& colors) {
  std::string s = "(";
  for (size_t k = 0; k < colors.size(); ++k) s += (k ? "," : "") + std::to_string(colors[k]);
  return s + ")";
}

Scalar eigen(int c, const RingSpec& ring, bool inverse) {
  Scalar mu = twist_eigenvalue(c, ring);
  return inverse ? mu.inverse() : mu;
}

}  // namespace

RingMatrix edge_twist_matrix(const UniTrivalentGraph& g, int edge, const std::vector<int>& boundary,
                             const RingSpec& ring, bool inverse) {
  if (edge < 0 || edge >= static_cast<int>(g.edges().size()))
    throw std::invalid_argument("edge index " + std::to_string(edge) + " out of range");
  const auto basis = enumerate_colorings(g, boundary, ring);
  if (basis.empty()) throw std::invalid_argument("zero-dimensional space");
  std::vector<Fraction> diag;
  for (const auto& col : basis) diag.emplace_back(eigen(col[static_cast<size_t>(edge)], ring, inverse));
  RingMatrix m = RingMatrix::diagonal(diag);
  for (const auto& col : basis) m.row_labels.push_back(coloring_label(col));
  m.col_labels = m.row_labels;
  return m;
}

RingMatrix dual_twist_matrix(int a, int b, int c, int d, const RingSpec& ring, bool inverse) {
  const RingMatrix f = fusion_matrix(a, b, c, d, ring);
  const RingMatrix finv = fusion_matrix(a, d, c, b, ring);
  std::vector<Fraction> diag;
  for (int j : w_basis_colors(a, b, c, d, ring)) diag.emplace_back(eigen(j, ring, inverse));
  RingMatrix dm = RingMatrix::diagonal(diag);
  dm.row_labels = f.row_labels;
  dm.col_labels = f.row_labels;
  return finv * dm * f;
}

// ---------------------------------------------------------------------------
// F-move planner on rooted binary trees.

namespace {

struct Tree {
  struct Node {
    int left = -1, right = -1;
    bool is_leaf() const { return left < 0; }
  };
  std::vector<Node> nodes;
  int root = -1;

  std::pair<int, int> interval(int v) const {
    if (nodes[static_cast<size_t>(v)].is_leaf()) return {v, v};
    return {interval(nodes[static_cast<size_t>(v)].left).first, interval(nodes[static_cast<size_t>(v)].right).second};
  }
};

/// Leaves 0..n-2 get node ids 0..n-2; internal nodes ((0,1),2),... follow,
/// the last one being the root (its parent edge is leg n).
Tree caterpillar(int n) {
  Tree t;
  t.nodes.resize(static_cast<size_t>(n - 1));
  int prev = 0;
  for (int k = 1; k <= n - 2; ++k) {
    t.nodes.push_back({prev, k});
    prev = static_cast<int>(t.nodes.size()) - 1;
  }
  t.root = prev;
  return t;
}

struct Move {
  bool right = true;  // ((X,Y),Z) -> (X,(Y,Z)) at node m, inner node a
  int m = 0, a = 0;
};

std::vector<Move> plan(Tree t, int lo, int hi, int& target) {
  std::vector<Move> moves;
  for (;;) {
    int v = t.root;
    for (;;) {
      if (t.interval(v) == std::make_pair(lo, hi)) {
        target = v;
        return moves;
      }
      const auto& node = t.nodes[static_cast<size_t>(v)];
      auto [llo, lhi] = t.interval(node.left);
      auto [rlo, rhi] = t.interval(node.right);
      if (llo <= lo && hi <= lhi) {
        v = node.left;
      } else if (rlo <= lo && hi <= rhi) {
        v = node.right;
      } else {
        break;
      }
    }
    auto& m = t.nodes[static_cast<size_t>(v)];
    const int l = m.left, r = m.right;
    if (t.interval(l).first < lo) {
      auto& a = t.nodes[static_cast<size_t>(l)];
      const int l1 = a.left, l2 = a.right;
      m.left = l1;
      m.right = l;
      a.left = l2;
      a.right = r;
      moves.push_back({true, v, l});
    } else {
      auto& a = t.nodes[static_cast<size_t>(r)];
      const int r1 = a.left, r2 = a.right;
      m.left = r;
      m.right = r2;
      a.left = l;
      a.right = r1;
      moves.push_back({false, v, r});
    }
  }
}

using Key = std::vector<int>;

struct Stage {
  Tree tree;
  std::vector<Key> basis;  // sorted node-color vectors
};

/// Applies `mv` to `s`, returning the new stage and the coordinate-change
/// matrix (rows: new basis, columns: old basis).
std::pair<Stage, RingMatrix> rotate(const Stage& s, const Move& mv, const RingSpec& ring) {
  Stage out;
  out.tree = s.tree;
  auto& m = out.tree.nodes[static_cast<size_t>(mv.m)];
  auto& a = out.tree.nodes[static_cast<size_t>(mv.a)];
  // colors read from the old tree
  int x, y, z;
  if (mv.right) {
    const auto& old_a = s.tree.nodes[static_cast<size_t>(mv.a)];
    x = old_a.left, y = old_a.right, z = s.tree.nodes[static_cast<size_t>(mv.m)].right;
    m.left = x;
    m.right = mv.a;
    a.left = y;
    a.right = z;
  } else {
    const auto& old_a = s.tree.nodes[static_cast<size_t>(mv.a)];
    x = s.tree.nodes[static_cast<size_t>(mv.m)].left, y = old_a.left, z = old_a.right;
    m.left = mv.a;
    m.right = z;
    a.left = x;
    a.right = y;
  }
  auto col = [](const Key& k, int v) { return k[static_cast<size_t>(v)]; };
  std::set<Key> next;
  for (const Key& k : s.basis) {
    const int X = col(k, x), Y = col(k, y), Z = col(k, z), P = col(k, mv.m);
    const auto options = mv.right ? w_basis_colors(X, Y, Z, P, ring) : v_basis_colors(X, Y, Z, P, ring);
    for (int f : options) {
      Key nk = k;
      nk[static_cast<size_t>(mv.a)] = f;
      next.insert(nk);
    }
  }
  out.basis.assign(next.begin(), next.end());
  std::map<Key, size_t> index;
  for (size_t r = 0; r < out.basis.size(); ++r) index.emplace(out.basis[r], r);
  RingMatrix mat(ring, out.basis.size(), s.basis.size());
  for (size_t c = 0; c < s.basis.size(); ++c) {
    const Key& k = s.basis[c];
    const int X = col(k, x), Y = col(k, y), Z = col(k, z), P = col(k, mv.m), old = col(k, mv.a);
    const auto options = mv.right ? w_basis_colors(X, Y, Z, P, ring) : v_basis_colors(X, Y, Z, P, ring);
    for (int f : options) {
      Key nk = k;
      nk[static_cast<size_t>(mv.a)] = f;
      // right: old (X,Y,old),(Z,P,old) -> new (X,P,f),(Y,Z,f)
      // left:  old (X,P,old),(Y,Z,old) -> new (X,Y,f),(Z,P,f)
      mat(index.at(nk), c) = mv.right ? sixj(X, Y, old, Z, P, f, ring) : sixj(X, P, old, Z, Y, f, ring);
    }
  }
  return {out, mat};
}

std::pair<int, int> target_interval(int n, int i, int j) {
  if (n < 3) throw std::invalid_argument("pure braid twists need n >= 3 punctures");
  if (i < 1 || j > n || i >= j) throw std::invalid_argument("puncture pair must satisfy 1 <= i < j <= n");
  // leaves are punctures 1..n-1 (0-based 0..n-2); leg n is the root
  if (j == i + 1 && j <= n - 1) return {i - 1, j - 1};
  if (j == n && i == n - 1) return {0, n - 3};
  if (j == n && i == 1) return {1, n - 2};
  throw std::invalid_argument("punctures " + std::to_string(i) + " and " + std::to_string(j) +
                              " are not cyclically adjacent; their twist needs braiding");
}

}  // namespace

int pure_braid_move_count(int n, int i, int j) {
  auto [lo, hi] = target_interval(n, i, j);
  int target = -1;
  return static_cast<int>(plan(caterpillar(n), lo, hi, target).size());
}

RingMatrix pure_braid_twist(int n, int i, int j, const std::vector<int>& boundary, const RingSpec& ring,
                            bool inverse) {
  if (static_cast<int>(boundary.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " boundary colors");
  auto [lo, hi] = target_interval(n, i, j);
  Stage start;
  start.tree = caterpillar(n);
  const size_t node_count = start.tree.nodes.size();
  std::vector<std::string> labels;
  if (n == 3) {
    if (!is_admissible_triple(boundary[0], boundary[1], boundary[2], ring))
      throw std::invalid_argument("zero-dimensional space");
    Key k(node_count);
    for (int q = 0; q < 2; ++q) k[static_cast<size_t>(q)] = boundary[static_cast<size_t>(q)];
    k[static_cast<size_t>(start.tree.root)] = boundary[2];
    start.basis.push_back(k);
    labels.push_back("()");
  } else {
    const UniTrivalentGraph g = standard_graph(0, n);
    const auto colorings = enumerate_colorings(g, boundary, ring);
    if (colorings.empty()) throw std::invalid_argument("zero-dimensional space");
    std::vector<int> x_edges;
    for (int k = 1; k <= n - 3; ++k) x_edges.push_back(g.find_edge("x" + std::to_string(k)));
    for (const auto& c : colorings) {
      Key k(node_count);
      for (int q = 0; q < n - 1; ++q) k[static_cast<size_t>(q)] = boundary[static_cast<size_t>(q)];
      std::vector<int> xs;
      for (size_t t = 0; t < x_edges.size(); ++t) {
        xs.push_back(c[static_cast<size_t>(x_edges[t])]);
        k[static_cast<size_t>(n - 1) + t] = xs.back();  // internal node ids n-1 .. 2n-5
      }
      k[static_cast<size_t>(start.tree.root)] = boundary[static_cast<size_t>(n - 1)];
      start.basis.push_back(k);
      labels.push_back(coloring_label(xs));
    }
  }
  int target = -1;
  const auto moves = plan(start.tree, lo, hi, target);
  std::vector<Stage> stages{start};
  std::vector<RingMatrix> forward;
  for (const auto& mv : moves) {
    auto [next, mat] = rotate(stages.back(), mv, ring);
    stages.push_back(std::move(next));
    forward.push_back(std::move(mat));
  }
  const Stage& last = stages.back();
  std::vector<Fraction> diag;
  for (const Key& k : last.basis) diag.emplace_back(eigen(k[static_cast<size_t>(target)], ring, inverse));
  RingMatrix result = RingMatrix::diagonal(diag);
  // conjugate back: result = M^{-1} D M, undoing moves in reverse order
  for (size_t t = moves.size(); t-- > 0;) {
    Move back = moves[t];
    back.right = !back.right;
    auto [undone, inv] = rotate(stages[t + 1], back, ring);
    if (undone.basis != stages[t].basis) throw std::logic_error("F-move planner produced an inconsistent basis");
    result = inv * result * forward[t];
  }
  result.row_labels = labels;
  result.col_labels = labels;
  return result;
}

}  // namespace tqft
