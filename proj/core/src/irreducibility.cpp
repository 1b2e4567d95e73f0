#include "tqft/irreducibility.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "tqft/coloring.hpp"
#include "tqft/mcg_action.hpp"
#include "tqft/recoupling.hpp"
#include "tqft/serialize.hpp"

namespace tqft {

using nlohmann::json;

DistinctnessResult multiplicity_free_check(const std::vector<Scalar>& values) {
  for (const auto& v : values)
    if (v.is_zero()) throw std::invalid_argument("multiplicity check needs nonzero values");
  DistinctnessResult r;
  // For nonzero x, y in a domain, x / y == 1 iff x == y.
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j]) {
        r.distinct = false;
        r.first = static_cast<int>(i);
        r.second = static_cast<int>(j);
        return r;
      }
  return r;
}

bool edge_witness_valid(const EdgeWitness& w, const RingSpec& ring) {
  switch (w.kind) {
    case EdgeWitness::Kind::Entry:
      return w.value.ring() == ring && !w.value.is_zero();
    case EdgeWitness::Kind::Triple:
      return is_admissible_triple(w.triple[0], w.triple[1], w.triple[2], ring);
    case EdgeWitness::Kind::Coloring: {
      if (w.genus < 2) return false;
      const UniTrivalentGraph g = standard_graph(w.genus, 0);
      if (w.coloring.size() != g.edges().size()) return false;
      for (int k = 0; k < 2; ++k) {
        const int e = w.cut_edges[static_cast<size_t>(k)];
        if (e < 0 || e >= static_cast<int>(w.coloring.size())) return false;
        if (w.coloring[static_cast<size_t>(e)] != w.cut_colors[static_cast<size_t>(k)]) return false;
      }
      for (const auto& inc : g.vertex_edges()) {
        if (inc.empty()) continue;
        const auto c = [&](int k) { return w.coloring[static_cast<size_t>(inc[static_cast<size_t>(k)])]; };
        if (!is_admissible_triple(c(0), c(1), c(2), ring)) return false;
      }
      return true;
    }
  }
  return false;
}

void DecompositionGraph::add_edge(DecompositionEdge e) {
  if (e.left < 0 || e.left >= static_cast<int>(left.size()) || e.right < 0 ||
      e.right >= static_cast<int>(right.size()))
    throw std::invalid_argument("decomposition edge index out of range");
  if (!edge_witness_valid(e.witness, ring)) throw std::invalid_argument("decomposition edge witness does not verify");
  edges.push_back(std::move(e));
}

namespace {

std::vector<std::string> labels_or(const std::vector<std::string>& labels, size_t n, const char* prefix) {
  if (labels.size() == n) return labels;
  std::vector<std::string> out;
  for (size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

}  // namespace

DecompositionGraph build_decomposition_graph(const RingMatrix& f, const RingMatrix& f_inverse) {
  if (!f.is_square() || f_inverse.rows() != f.cols() || f_inverse.cols() != f.rows())
    throw std::invalid_argument("transition matrix shapes do not match");
  if (!(f * f_inverse).is_identity() || !(f_inverse * f).is_identity())
    throw std::invalid_argument("supplied inverse is not the exact inverse");
  DecompositionGraph g;
  g.ring = f.ring();
  g.left = labels_or(f.col_labels, f.cols(), "L");
  g.right = labels_or(f.row_labels, f.rows(), "R");
  for (size_t i = 0; i < f.cols(); ++i)
    for (size_t j = 0; j < f.rows(); ++j) {
      if (!f(j, i).is_zero()) {
        DecompositionEdge e;
        e.direction = DecompositionEdge::Direction::LeftToRight;
        e.left = static_cast<int>(i);
        e.right = static_cast<int>(j);
        e.witness.value = f(j, i);
        g.add_edge(std::move(e));
      }
      if (!f_inverse(i, j).is_zero()) {
        DecompositionEdge e;
        e.direction = DecompositionEdge::Direction::RightToLeft;
        e.left = static_cast<int>(i);
        e.right = static_cast<int>(j);
        e.witness.value = f_inverse(i, j);
        g.add_edge(std::move(e));
      }
    }
  return g;
}

DecompositionGraph build_decomposition_graph(const RingMatrix& f) { return build_decomposition_graph(f, f.inverse()); }

std::string to_string(ConnectivityMode m) { return m == ConnectivityMode::Strong ? "strong" : "undirected"; }

ConnectivityResult connectivity(const DecompositionGraph& g, ConnectivityMode mode) {
  const int nl = static_cast<int>(g.left.size());
  const int n = nl + static_cast<int>(g.right.size());
  if (n == 0) throw std::invalid_argument("connectivity of an empty graph");
  // Vertices 0..nl-1 are left summands, nl.. right summands.
  std::vector<std::vector<int>> out(static_cast<size_t>(n)), in(static_cast<size_t>(n));
  auto arc = [&](int u, int v) {
    out[static_cast<size_t>(u)].push_back(v);
    in[static_cast<size_t>(v)].push_back(u);
  };
  for (const auto& e : g.edges) {
    const int l = e.left, r = nl + e.right;
    const bool lr = mode == ConnectivityMode::Undirected || e.direction != DecompositionEdge::Direction::RightToLeft;
    const bool rl = mode == ConnectivityMode::Undirected || e.direction != DecompositionEdge::Direction::LeftToRight;
    if (lr) arc(l, r);
    if (rl) arc(r, l);
  }
  auto reach = [&](int s, const std::vector<std::vector<int>>& adj, const std::vector<int>& allowed) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{s};
    seen[static_cast<size_t>(s)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[static_cast<size_t>(u)])
        if (!seen[static_cast<size_t>(v)] && allowed[static_cast<size_t>(v)]) {
          seen[static_cast<size_t>(v)] = 1;
          stack.push_back(v);
        }
    }
    return seen;
  };
  // Components: undirected reachability, or forward and backward
  // reachability intersected for strong components.
  std::vector<int> remaining(static_cast<size_t>(n), 1);
  ConnectivityResult r;
  for (int s = 0; s < n; ++s) {
    if (!remaining[static_cast<size_t>(s)]) continue;
    const auto fwd = reach(s, out, remaining);
    const auto bwd = reach(s, in, remaining);
    std::vector<std::string> comp;
    for (int v = 0; v < n; ++v) {
      const bool member = fwd[static_cast<size_t>(v)] && (mode == ConnectivityMode::Undirected || bwd[static_cast<size_t>(v)]);
      if (!member) continue;
      remaining[static_cast<size_t>(v)] = 0;
      comp.push_back(v < nl ? "L" + std::to_string(v) : "R" + std::to_string(v - nl));
    }
    r.components.push_back(std::move(comp));
  }
  r.connected = r.components.size() == 1;
  return r;
}

json to_json(const DecompositionGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges) {
    json w;
    switch (e.witness.kind) {
      case EdgeWitness::Kind::Entry:
        w = json{{"type", "entry"}, {"value", to_json(e.witness.value)}};
        break;
      case EdgeWitness::Kind::Triple:
        w = json{{"type", "triple"}, {"triple", e.witness.triple}};
        break;
      case EdgeWitness::Kind::Coloring:
        w = json{{"type", "coloring"},
                 {"genus", e.witness.genus},
                 {"coloring", e.witness.coloring},
                 {"cut_edges", e.witness.cut_edges},
                 {"cut_colors", e.witness.cut_colors}};
        break;
    }
    const char* dir = e.direction == DecompositionEdge::Direction::LeftToRight   ? "lr"
                      : e.direction == DecompositionEdge::Direction::RightToLeft ? "rl"
                                                                                 : "both";
    edges.push_back(json{{"dir", dir}, {"left", e.left}, {"right", e.right}, {"witness", std::move(w)}});
  }
  return json{{"ring", to_json(g.ring)}, {"left", g.left}, {"right", g.right}, {"edges", std::move(edges)}};
}

DecompositionGraph decomposition_graph_from_json(const json& j) {
  DecompositionGraph g;
  g.ring = ring_from_json(j.at("ring"));
  g.left = j.at("left").get<std::vector<std::string>>();
  g.right = j.at("right").get<std::vector<std::string>>();
  for (const auto& ej : j.at("edges")) {
    DecompositionEdge e;
    const std::string dir = ej.at("dir").get<std::string>();
    if (dir == "lr") e.direction = DecompositionEdge::Direction::LeftToRight;
    else if (dir == "rl") e.direction = DecompositionEdge::Direction::RightToLeft;
    else if (dir == "both") e.direction = DecompositionEdge::Direction::Both;
    else throw std::invalid_argument("unknown edge direction: " + dir);
    e.left = ej.at("left").get<int>();
    e.right = ej.at("right").get<int>();
    const json& w = ej.at("witness");
    const std::string type = w.at("type").get<std::string>();
    if (type == "entry") {
      e.witness.kind = EdgeWitness::Kind::Entry;
      e.witness.value = fraction_from_json(w.at("value"));
    } else if (type == "triple") {
      e.witness.kind = EdgeWitness::Kind::Triple;
      e.witness.triple = w.at("triple").get<std::array<int, 3>>();
    } else if (type == "coloring") {
      e.witness.kind = EdgeWitness::Kind::Coloring;
      e.witness.genus = w.at("genus").get<int>();
      e.witness.coloring = w.at("coloring").get<std::vector<int>>();
      e.witness.cut_edges = w.at("cut_edges").get<std::array<int, 2>>();
      e.witness.cut_colors = w.at("cut_colors").get<std::array<int, 2>>();
    } else {
      throw std::invalid_argument("unknown edge witness type: " + type);
    }
    g.add_edge(std::move(e));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Shared certificate pieces.

namespace {

json instance_json(const RingSpec& ring, int g, int b, const std::vector<int>& colors) {
  return json{{"ring", to_json(ring)}, {"g", g}, {"b", b}, {"colors", colors}};
}

json space_json(int g, int b, const std::vector<int>& colors) { return json{{"g", g}, {"b", b}, {"colors", colors}}; }

Check dimension_check(const RingSpec& ring, int g, int b, const std::vector<int>& colors, long long dim) {
  Check c;
  c.name = "dimension";
  c.kind = check_kind::kDimension;
  c.status = CheckStatus::Passed;
  c.witness = instance_json(ring, g, b, colors);
  c.witness["dim"] = dim;
  c.detail = "admissible colorings of the standard graph";
  return c;
}

Check spectrum_check(const std::string& name, const std::vector<int>& colors, const RingSpec& ring,
                     const std::string& detail) {
  Check c;
  c.name = name;
  c.kind = check_kind::kDistinctValues;
  std::vector<Scalar> values;
  json vs = json::array();
  for (int col : colors) {
    values.push_back(twist_eigenvalue(col, ring));
    vs.push_back(to_json(values.back()));
  }
  const auto r = multiplicity_free_check(values);
  c.status = r.distinct ? CheckStatus::Passed : CheckStatus::Failed;
  c.witness = json{{"colors", colors}, {"values", std::move(vs)}};
  if (!r.distinct) c.witness["pair"] = {r.first, r.second};
  c.detail = detail;
  return c;
}

Check connectivity_check(const DecompositionGraph& g, ConnectivityMode mode) {
  Check c;
  c.name = "decomposition_graph";
  c.kind = check_kind::kConnectivity;
  const auto r = connectivity(g, mode);
  c.status = r.connected ? CheckStatus::Passed : CheckStatus::Failed;
  c.witness = json{{"mode", to_string(mode)}, {"graph", to_json(g)}};
  if (!r.connected) c.witness["components"] = r.components;
  c.detail = mode == ConnectivityMode::Strong ? "strongly connected directed graph of nonzero components"
                                              : "connected graph of nonzero components";
  return c;
}

/// dim(total) = sum over parts of the product of factor dimensions.
Check dimension_sum_check(const std::string& name, const RingSpec& ring, int g, int b, const std::vector<int>& colors,
                          const std::vector<std::vector<std::tuple<int, int, std::vector<int>>>>& parts) {
  Check c;
  c.name = name;
  c.kind = check_kind::kDimensionSum;
  const long long total = dimension(g, b, colors, ring);
  json pj = json::array();
  long long sum = 0;
  for (const auto& part : parts) {
    json fj = json::array();
    long long prod = 1;
    for (const auto& [fg, fb, fc] : part) {
      fj.push_back(space_json(fg, fb, fc));
      prod *= dimension(fg, fb, fc, ring);
    }
    sum += prod;
    pj.push_back(std::move(fj));
  }
  c.status = sum == total ? CheckStatus::Passed : CheckStatus::Failed;
  c.witness = json{{"ring", to_json(ring)}, {"total", space_json(g, b, colors)}, {"dim", total}, {"parts", std::move(pj)}};
  c.detail = "summand dimensions add up to " + std::to_string(total);
  return c;
}

const char* kConnectedCited = "a connected graph between two multiplicity-free decompositions into irreducible "
                              "summands forces irreducibility (Hermitian pairing available)";
const char* kStrongCited = "a strongly connected directed graph between two multiplicity-free decompositions "
                           "forces irreducibility";

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// Base cases.

Certificate certify_v04(const RingSpec& ring, int a, int b, int c, int d) {
  Certificate cert;
  cert.claim = "irreducible_v04";
  const std::vector<int> colors{a, b, c, d};
  cert.instance = instance_json(ring, 0, 4, colors);
  for (int col : colors)
    if (col < 0) throw std::invalid_argument("colors must be nonnegative");
  const auto v = v_basis_colors(a, b, c, d, ring);
  const auto w = w_basis_colors(a, b, c, d, ring);
  const long long dim = static_cast<long long>(v.size());
  cert.add_check(dimension_check(ring, 0, 4, colors, dim));
  if (dim == 0) {
    cert.status = CertStatus::NotApplicable;
    cert.substatus = "zero-dimensional";
    return cert;
  }
  if (dim == 1) {
    cert.status = CertStatus::Vacuous;
    cert.substatus = "trivially irreducible";
    return cert;
  }
  cert.add_check(spectrum_check("v_twist_spectrum", v, ring, "twist about legs 1,2 on the v-basis"));
  cert.add_check(spectrum_check("w_twist_spectrum", w, ring, "twist about legs 2,3 on the w-basis"));

  RingMatrix f = fusion_matrix(a, b, c, d, ring);
  RingMatrix f_inv = fusion_matrix(a, d, c, b, ring);
  f_inv.row_labels = f.col_labels;
  f_inv.col_labels = f.row_labels;
  {
    Check k;
    k.name = "fusion_round_trip";
    k.kind = check_kind::kMatrixInverse;
    const bool ok = (f * f_inv).is_identity() && (f_inv * f).is_identity();
    k.status = ok ? CheckStatus::Passed : CheckStatus::Failed;
    k.witness = json{{"matrix", to_json(f)}, {"inverse", to_json(f_inv)}};
    k.detail = "F(a,b,c,d) and F(a,d,c,b) are mutually inverse";
    cert.add_check(std::move(k));
  }
  const ConnectivityMode mode = ring.is_generic() ? ConnectivityMode::Strong : ConnectivityMode::Undirected;
  const DecompositionGraph graph = build_decomposition_graph(f, f_inv);
  cert.add_check(connectivity_check(graph, mode));
  {
    // Column of v_{i0}: its expansion over the w-basis.
    Check k;
    k.name = "row_condition";
    k.kind = check_kind::kNonzeroValues;
    json values = json::array(), labels = json::array();
    bool ok = true;
    for (size_t j = 0; j < f.rows(); ++j) {
      values.push_back(to_json(f(j, 0)));
      labels.push_back(f.row_labels[j]);
      ok = ok && !f(j, 0).is_zero();
    }
    k.status = ok ? CheckStatus::Passed : CheckStatus::Failed;
    k.witness = json{{"column", f.col_labels[0]}, {"labels", std::move(labels)}, {"values", std::move(values)}};
    k.detail = "every w-coefficient of the lowest v-vector is nonzero";
    cert.add_check(std::move(k));
  }
  cert.cited.push_back(mode == ConnectivityMode::Strong ? kStrongCited : kConnectedCited);
  cert.finalize();
  return cert;
}

Certificate certify_torus(int p, int a) {
  const RingSpec ring = RingSpec::root_of_unity(p);
  if (a < 1 || 2 * a > p - 3)
    throw std::invalid_argument("torus color index a = " + std::to_string(a) + " outside 1 <= a <= (p-3)/2");
  Certificate cert;
  cert.claim = "irreducible_torus";
  cert.instance = instance_json(ring, 1, 1, {2 * a});
  {
    Check k;
    k.name = "vandermonde_nodes";
    k.kind = check_kind::kDistinctValues;
    std::vector<Scalar> nodes;
    json values = json::array();
    for (int j = 0; j <= p - a - 2; ++j) {
      const int e = (j + a) * (j + a + 2);
      nodes.push_back(Scalar::monomial(ring, e, j % 2 == 0 ? 1 : -1));
      values.push_back(to_json(nodes.back()));
    }
    const auto r = multiplicity_free_check(nodes);
    k.status = r.distinct ? CheckStatus::Passed : CheckStatus::Failed;
    k.witness = json{{"j_range", {0, p - a - 2}}, {"values", std::move(values)}};
    if (!r.distinct) k.witness["pair"] = {r.first, r.second};
    k.detail = "(-1)^j A^{(j+a)(j+a+2)} pairwise distinct, so the pairing matrix is Vandermonde times diagonal";
    cert.add_check(std::move(k));
  }
  {
    Check k;
    k.name = "dimension_record";
    k.kind = check_kind::kInfo;
    k.status = CheckStatus::Passed;
    const long long dim = dimension(1, 1, {2 * a}, ring);
    k.witness = json{{"dim", dim}, {"index_range_size", p - a - 1}};
    k.detail = "admissible loop colors run over a..p-2-a";
    cert.add_check(std::move(k));
  }
  cert.assumptions.push_back("Hopf pairing <v_0, v_j> != 0 for every lollipop vector v_j; cited, not verified");
  cert.cited.push_back("v_0 has a component in every twist eigenspace once the pairing matrix is invertible");
  cert.cited.push_back(kConnectedCited);
  cert.finalize();
  return cert;
}

// ---------------------------------------------------------------------------
// Induction steps.

std::string to_string(InductionKind k) {
  switch (k) {
    case InductionKind::Hub: return "hub";
    case InductionKind::Closed: return "closed";
    case InductionKind::Chain: return "chain";
  }
  return "chain";
}

InductionKind induction_kind_from_string(const std::string& s) {
  if (s == "hub") return InductionKind::Hub;
  if (s == "closed") return InductionKind::Closed;
  if (s == "chain") return InductionKind::Chain;
  throw std::invalid_argument("unknown induction step: " + s);
}

namespace {

bool lex_below(int g1, int b1, int g, int b) { return g1 < g || (g1 == g && b1 < b); }

/// Color range for internal edges: 0..p-2, or up to `bound` in generic mode.
int color_ceiling(const RingSpec& ring, int bound) { return ring.is_root_of_unity() ? ring.max_color() : bound; }

InductionStep vacuous_step(const RingSpec& ring, const std::string& claim, int g, int b,
                           const std::vector<int>& colors, long long dim) {
  InductionStep s;
  s.graph.ring = ring;
  s.certificate.claim = claim;
  s.certificate.instance = instance_json(ring, g, b, colors);
  s.certificate.add_check(dimension_check(ring, g, b, colors, dim));
  s.certificate.status = dim == 0 ? CertStatus::NotApplicable : CertStatus::Vacuous;
  s.certificate.substatus = dim == 0 ? "zero-dimensional" : "trivially irreducible";
  return s;
}

InductionStep hub_step(const RingSpec& ring, const InductionParams& prm) {
  const int g = prm.g;
  if (g < 1 || prm.colors.size() != 2) throw std::invalid_argument("hub step needs g >= 1 and two boundary colors");
  const int p = ring.p();
  const int a = prm.colors[0], b = prm.colors[1];
  const long long dim = dimension(g, 2, prm.colors, ring);
  if (dim <= 1) return vacuous_step(ring, "step_hub", g, 2, prm.colors, dim);

  InductionStep s;
  s.graph.ring = ring;
  Certificate& cert = s.certificate;
  cert.claim = "step_hub";
  cert.instance = instance_json(ring, g, 2, prm.colors);

  std::vector<int> a_colors;
  std::vector<std::pair<int, int>> b_pairs;
  std::vector<std::vector<std::tuple<int, int, std::vector<int>>>> a_parts, b_parts;
  const int top = ring.max_color();
  for (int c = 0; c <= top; ++c) {
    if (dimension(g, 1, {c}, ring) > 0 && dimension(0, 3, {c, a, b}, ring) > 0) {
      a_colors.push_back(c);
      a_parts.push_back({{g, 1, {c}}, {0, 3, {c, a, b}}});
      s.graph.left.push_back("A" + std::to_string(c));
      s.pieces.push_back({g, 1, {c}});
      s.pieces.push_back({0, 3, {c, a, b}});
    }
  }
  std::set<int> b_first, b_second;
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= top; ++j)
      if (dimension(g - 1, 2, {i, j}, ring) > 0 && dimension(0, 4, {i, j, a, b}, ring) > 0) {
        b_pairs.emplace_back(i, j);
        b_parts.push_back({{g - 1, 2, {i, j}}, {0, 4, {i, j, a, b}}});
        s.graph.right.push_back("B" + std::to_string(i) + "," + std::to_string(j));
        b_first.insert(i);
        b_second.insert(j);
        s.pieces.push_back({g - 1, 2, {i, j}});
        s.pieces.push_back({0, 4, {i, j, a, b}});
      }
  for (size_t l = 0; l < a_colors.size(); ++l)
    for (size_t r = 0; r < b_pairs.size(); ++r)
      if (is_admissible_triple(a_colors[l], b_pairs[r].first, b_pairs[r].second, ring)) {
        DecompositionEdge e;
        e.left = static_cast<int>(l);
        e.right = static_cast<int>(r);
        e.witness.kind = EdgeWitness::Kind::Triple;
        e.witness.triple = {a_colors[l], b_pairs[r].first, b_pairs[r].second};
        s.graph.add_edge(std::move(e));
      }

  cert.add_check(dimension_sum_check("separating_cut_dimensions", ring, g, 2, prm.colors, a_parts));
  cert.add_check(dimension_sum_check("double_cut_dimensions", ring, g, 2, prm.colors, b_parts));
  cert.add_check(spectrum_check("separating_twist_spectrum", a_colors, ring, "twist about the separating curve"));
  cert.add_check(spectrum_check("first_cut_twist_spectrum", {b_first.begin(), b_first.end()}, ring,
                                "twist about the first nonseparating curve"));
  cert.add_check(spectrum_check("second_cut_twist_spectrum", {b_second.begin(), b_second.end()}, ring,
                                "twist about the second nonseparating curve"));
  {
    const int h = (p - 3) / 2;
    Check k;
    k.name = "hub";
    k.kind = check_kind::kHub;
    bool ok = dimension(g - 1, 2, {h, h}, ring) > 0 && dimension(0, 4, {h, h, a, b}, ring) > 0;
    for (int c : a_colors) ok = ok && is_admissible_triple(c, h, h, ring);
    k.status = ok ? CheckStatus::Passed : CheckStatus::Failed;
    k.witness = json{{"ring", to_json(ring)},
                     {"hub", h},
                     {"left_colors", a_colors},
                     {"hub_factors", {space_json(g - 1, 2, {h, h}), space_json(0, 4, {h, h, a, b})}}};
    k.detail = "every separating summand meets B_{h,h}, h = (p-3)/2, which is nonzero";
    cert.add_check(std::move(k));
  }
  cert.add_check(connectivity_check(s.graph, ConnectivityMode::Undirected));
  cert.cited.push_back("restriction to a subsurface factors through the subsurface representations");
  cert.cited.push_back(kConnectedCited);
  cert.finalize();
  return s;
}

InductionStep closed_step(const RingSpec& ring, const InductionParams& prm) {
  const int g = prm.g;
  if (g < 2 || !prm.colors.empty()) throw std::invalid_argument("closed step needs g >= 2 and no boundary");
  const long long dim = dimension(g, 0, {}, ring);
  if (dim <= 1) return vacuous_step(ring, "step_closed", g, 0, {}, dim);

  InductionStep s;
  s.graph.ring = ring;
  Certificate& cert = s.certificate;
  cert.claim = "step_closed";
  cert.instance = instance_json(ring, g, 0, {});

  std::vector<int> cols;
  std::vector<std::vector<std::tuple<int, int, std::vector<int>>>> parts;
  for (int i = 0; i <= ring.max_color(); ++i)
    if (dimension(g - 1, 2, {i, i}, ring) > 0) {
      cols.push_back(i);
      parts.push_back({{g - 1, 2, {i, i}}});
      s.graph.left.push_back("A" + std::to_string(i));
      s.graph.right.push_back("B" + std::to_string(i));
      s.pieces.push_back({g - 1, 2, {i, i}});
    }
  // A_i and B_j are cut along the dual curves of the two lollipop loops.
  const UniTrivalentGraph graph = standard_graph(g, 0);
  std::vector<int> loops;
  for (size_t e = 0; e < graph.edges().size(); ++e)
    if (graph.edges()[e].u == graph.edges()[e].v) loops.push_back(static_cast<int>(e));
  if (loops.size() < 2) throw std::logic_error("closed standard graph lacks two lollipops");
  const int alpha = loops.front(), beta = loops.back();
  for (size_t l = 0; l < cols.size(); ++l)
    for (size_t r = 0; r < cols.size(); ++r) {
      DecompositionEdge e;
      e.left = static_cast<int>(l);
      e.right = static_cast<int>(r);
      e.witness.kind = EdgeWitness::Kind::Coloring;
      e.witness.genus = g;
      e.witness.coloring.assign(graph.edges().size(), 0);
      e.witness.coloring[static_cast<size_t>(alpha)] = cols[l];
      e.witness.coloring[static_cast<size_t>(beta)] = cols[r];
      e.witness.cut_edges = {alpha, beta};
      e.witness.cut_colors = {cols[l], cols[r]};
      s.graph.add_edge(std::move(e));
    }
  cert.add_check(dimension_sum_check("cut_dimensions", ring, g, 0, {}, parts));
  cert.add_check(spectrum_check("cut_twist_spectrum", cols, ring, "twist about either nonseparating curve"));
  cert.add_check(connectivity_check(s.graph, ConnectivityMode::Undirected));
  cert.cited.push_back("restriction to a subsurface factors through the subsurface representations");
  cert.cited.push_back(kConnectedCited);
  cert.finalize();
  return s;
}

InductionStep chain_step(const RingSpec& ring, const InductionParams& prm) {
  const int g = prm.g;
  const int b = prm.b1 + prm.b2 + 1;
  if (prm.g1 < 0 || prm.g2 < 0 || prm.b1 < 0 || prm.b2 < 0 || prm.g1 + prm.g2 != g)
    throw std::invalid_argument("chain split must satisfy g = g1 + g2 with nonnegative parts");
  if (static_cast<int>(prm.colors.size()) != b)
    throw std::invalid_argument("chain step needs b1 + b2 + 1 boundary colors");
  for (auto [pg, pb] : {std::pair{prm.g1, prm.b1 + 1}, std::pair{prm.g2, prm.b2 + 2}, std::pair{prm.g1, prm.b1 + 2},
                        std::pair{prm.g2, prm.b2 + 1}})
    if (!lex_below(pg, pb, g, b))
      throw std::invalid_argument("chain split piece (" + std::to_string(pg) + "," + std::to_string(pb) +
                                  ") is not below (" + std::to_string(g) + "," + std::to_string(b) + ")");
  const int a = prm.colors.back();
  if (ring.is_root_of_unity() && a == ring.p() - 2)
    throw std::invalid_argument("chain step needs the cut boundary color a != p-2");
  const std::vector<int> c1(prm.colors.begin(), prm.colors.begin() + prm.b1);
  const std::vector<int> c2(prm.colors.begin() + prm.b1, prm.colors.end() - 1);
  const long long dim = dimension(g, b, prm.colors, ring);
  if (dim <= 1) return vacuous_step(ring, "step_chain", g, b, prm.colors, dim);

  InductionStep s;
  s.graph.ring = ring;
  Certificate& cert = s.certificate;
  cert.claim = "step_chain";
  cert.instance = instance_json(ring, g, b, prm.colors);
  cert.instance["split"] = {{"g1", prm.g1}, {"b1", prm.b1}, {"g2", prm.g2}, {"b2", prm.b2}};

  const int top = color_ceiling(ring, std::accumulate(prm.colors.begin(), prm.colors.end(), 0));
  std::vector<int> a_cols, b_cols;
  std::vector<std::vector<std::tuple<int, int, std::vector<int>>>> a_parts, b_parts;
  for (int i = 0; i <= top; ++i) {
    const auto f1 = concat(c1, {i});
    const auto f2 = concat(c2, {i, a});
    if (dimension(prm.g1, prm.b1 + 1, f1, ring) > 0 && dimension(prm.g2, prm.b2 + 2, f2, ring) > 0) {
      a_cols.push_back(i);
      a_parts.push_back({{prm.g1, prm.b1 + 1, f1}, {prm.g2, prm.b2 + 2, f2}});
      s.graph.left.push_back("A" + std::to_string(i));
      s.pieces.push_back({prm.g1, prm.b1 + 1, f1});
      s.pieces.push_back({prm.g2, prm.b2 + 2, f2});
    }
  }
  for (int j = 0; j <= top; ++j) {
    const auto f1 = concat(c1, {a, j});
    const auto f2 = concat(c2, {j});
    if (dimension(prm.g1, prm.b1 + 2, f1, ring) > 0 && dimension(prm.g2, prm.b2 + 1, f2, ring) > 0) {
      b_cols.push_back(j);
      b_parts.push_back({{prm.g1, prm.b1 + 2, f1}, {prm.g2, prm.b2 + 1, f2}});
      s.graph.right.push_back("B" + std::to_string(j));
      s.pieces.push_back({prm.g1, prm.b1 + 2, f1});
      s.pieces.push_back({prm.g2, prm.b2 + 1, f2});
    }
  }
  // The graph with the cut edges colored i and j through a vertex (i, j, a)
  // lies in both A_i and B_j; in generic mode this gives arrows both ways.
  for (size_t l = 0; l < a_cols.size(); ++l)
    for (size_t r = 0; r < b_cols.size(); ++r)
      if (is_admissible_triple(a_cols[l], b_cols[r], a, ring)) {
        DecompositionEdge e;
        e.left = static_cast<int>(l);
        e.right = static_cast<int>(r);
        e.witness.kind = EdgeWitness::Kind::Triple;
        e.witness.triple = {a_cols[l], b_cols[r], a};
        s.graph.add_edge(std::move(e));
      }

  cert.add_check(dimension_sum_check("first_cut_dimensions", ring, g, b, prm.colors, a_parts));
  cert.add_check(dimension_sum_check("second_cut_dimensions", ring, g, b, prm.colors, b_parts));
  cert.add_check(spectrum_check("first_cut_twist_spectrum", a_cols, ring, "twist about the first cut curve"));
  cert.add_check(spectrum_check("second_cut_twist_spectrum", b_cols, ring, "twist about the second cut curve"));
  {
    // For consecutive A_i, A_{i-2} exhibit a common neighbour B_{j''}.
    Check k;
    k.name = "interval_chain";
    k.kind = check_kind::kIntervalChain;
    bool ok = !a_cols.empty();
    json steps = json::array();
    const std::set<int> b_set(b_cols.begin(), b_cols.end());
    for (size_t l = 1; l < a_cols.size() && ok; ++l) {
      const int i = a_cols[l];
      if (a_cols[l - 1] != i - 2) {
        ok = false;
        break;
      }
      int j = -1;
      for (int cand : b_cols)
        if (is_admissible_triple(i, cand, a, ring)) {
          j = cand;
          break;
        }
      if (j < 0) {
        ok = false;
        break;
      }
      int j2 = j;
      std::string how = "direct";
      if (!is_admissible_triple(i - 2, j, a, ring)) {
        if (i + j == a) {
          j2 = j + 2;
          how = "sum_tight";
        } else if (j - i == a) {
          j2 = j - 2;
          how = "difference_tight";
        } else {
          how = "level_tight";
        }
      }
      const bool found = b_set.count(j2) && is_admissible_triple(i, j2, a, ring) && is_admissible_triple(i - 2, j2, a, ring);
      steps.push_back(json{{"i", i}, {"j", j2}, {"case", how}});
      ok = ok && found;
    }
    k.status = ok ? CheckStatus::Passed : CheckStatus::Failed;
    k.witness = json{{"ring", to_json(ring)}, {"a", a}, {"left_colors", a_cols}, {"right_colors", b_cols},
                     {"steps", std::move(steps)}};
    k.detail = "consecutive summands of the first cut share a summand of the second";
    cert.add_check(std::move(k));
  }
  const ConnectivityMode mode = ring.is_generic() ? ConnectivityMode::Strong : ConnectivityMode::Undirected;
  cert.add_check(connectivity_check(s.graph, mode));
  cert.cited.push_back("restriction to a subsurface factors through the subsurface representations");
  cert.cited.push_back(mode == ConnectivityMode::Strong ? kStrongCited : kConnectedCited);
  cert.finalize();
  return s;
}

}  // namespace

InductionStep induction_step_graph(InductionKind kind, int p, const InductionParams& params) {
  const RingSpec ring = RingSpec::root_of_unity(p);
  switch (kind) {
    case InductionKind::Hub: return hub_step(ring, params);
    case InductionKind::Closed: return closed_step(ring, params);
    case InductionKind::Chain: return chain_step(ring, params);
  }
  throw std::invalid_argument("unknown induction step");
}

std::optional<ChainSplit> choose_chain_split(int g, int b) {
  for (int g1 = 0; g1 <= g; ++g1)
    for (int b1 = 0; b1 <= b - 1; ++b1) {
      const int g2 = g - g1, b2 = b - 1 - b1;
      if (lex_below(g1, b1 + 1, g, b) && lex_below(g2, b2 + 2, g, b) && lex_below(g1, b1 + 2, g, b) &&
          lex_below(g2, b2 + 1, g, b))
        return ChainSplit{g1, b1, g2, b2};
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Induction driver.

namespace {

using Key = std::tuple<int, int, std::vector<int>>;

class Driver {
 public:
  Driver(const RingSpec& ring, InductionBounds bounds) : ring_(ring), bounds_(bounds) {}

  Certificate node(int g, int b, std::vector<int> colors, int depth) {
    if (depth > bounds_.max_depth)
      throw std::invalid_argument("induction depth exceeds max_depth bound " + std::to_string(bounds_.max_depth));
    if (static_cast<int>(colors.size()) != b) throw std::invalid_argument("boundary color count does not match b");
    for (int c : colors) {
      if (c < 0) throw std::invalid_argument("colors must be nonnegative");
      if (c > bounds_.max_color)
        throw std::invalid_argument("color " + std::to_string(c) + " exceeds max_color bound " +
                                    std::to_string(bounds_.max_color));
    }
    // Relabeling boundary components is a homeomorphism, so sort.
    std::sort(colors.begin(), colors.end());
    Key key{g, b, colors};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Certificate c = build(g, b, colors, depth);
    memo_.emplace(std::move(key), c);
    return c;
  }

 private:
  Certificate build(int g, int b, const std::vector<int>& colors, int depth) {
    const int p = ring_.p();
    const long long dim = dimension(g, b, colors, ring_);
    if (dim <= 1) return vacuous_step(ring_, "irreducible", g, b, colors, dim).certificate;

    if ((g == 1 && b == 0) || (g == 1 && b == 1 && colors[0] == 0)) {
      Certificate c;
      c.claim = "irreducible_weil";
      c.instance = instance_json(ring_, g, b, colors);
      c.add_check(dimension_check(ring_, g, b, colors, dim));
      c.assumptions.push_back("the closed torus (Weil) representation is irreducible; cited, not computed");
      c.finalize();
      return c;
    }
    if (b >= 2) {
      const auto top = std::find(colors.begin(), colors.end(), p - 2);
      if (top != colors.end()) return reduction(g, b, colors, static_cast<size_t>(top - colors.begin()), depth);
    }
    if (g == 0 && b == 4) return certify_v04(ring_, colors[0], colors[1], colors[2], colors[3]);
    if (g == 1 && b == 1) return certify_torus(p, colors[0] / 2);

    if (b >= 1 && g + b > 2 && *std::max_element(colors.begin(), colors.end()) == 0)
      return cap_zero(g, b, colors, depth);

    InductionStep step;
    if (g == 1 && b == 2) {
      step = hub_step(ring_, InductionParams{g, colors});
    } else if (b == 0) {
      step = closed_step(ring_, InductionParams{g, {}});
    } else {
      const auto split = choose_chain_split(g, b);
      if (!split) throw std::logic_error("no chain split for (" + std::to_string(g) + "," + std::to_string(b) + ")");
      // The cut boundary is the largest color; colors carry no p-2 here.
      step = chain_step(ring_, InductionParams{g, colors, split->g1, split->b1, split->g2, split->b2});
    }
    Certificate c = std::move(step.certificate);
    if (c.status == CertStatus::Vacuous || c.status == CertStatus::NotApplicable) return c;
    std::set<Key> seen;
    for (auto& piece : step.pieces) {
      std::sort(piece.colors.begin(), piece.colors.end());
      if (!seen.insert(Key{piece.g, piece.b, piece.colors}).second) continue;
      c.children.push_back(node(piece.g, piece.b, piece.colors, depth + 1));
    }
    c.finalize();
    return c;
  }

  /// A boundary colored 0 is capped off: the action factors through the
  /// surjective capping map to MCG of the surface with one hole fewer.
  Certificate cap_zero(int g, int b, const std::vector<int>& colors, int depth) {
    const std::vector<int> rest(colors.begin() + 1, colors.end());
    Certificate c;
    c.claim = "zero_cap";
    c.instance = instance_json(ring_, g, b, colors);
    c.add_check(dimension_sum_check("capped_dimension", ring_, g, b, colors, {{{g, b - 1, rest}}}));
    c.children.push_back(node(g, b - 1, rest, depth + 1));
    c.cited.push_back("capping a boundary colored 0 identifies the space with the capped surface's space, "
                      "equivariantly for the surjective capping homomorphism");
    c.finalize();
    return c;
  }

  Certificate reduction(int g, int b, const std::vector<int>& colors, size_t top, int depth) {
    const int p = ring_.p();
    const size_t other = top == 0 ? 1 : 0;
    const int i = colors[other];
    std::vector<int> rest;
    for (size_t k = 0; k < colors.size(); ++k)
      if (k != top && k != other) rest.push_back(colors[k]);
    rest.push_back(p - 2 - i);
    Certificate c;
    c.claim = "level_reduction";
    c.instance = instance_json(ring_, g, b, colors);
    {
      Check k;
      k.name = "fusion_triple";
      k.kind = check_kind::kAdmissibleTriples;
      const bool ok = is_admissible_triple(p - 2, i, p - 2 - i, ring_);
      k.status = ok ? CheckStatus::Passed : CheckStatus::Failed;
      k.witness = json{{"ring", to_json(ring_)}, {"triples", {{p - 2, i, p - 2 - i}}}};
      k.detail = "legs p-2 and i fuse only to p-2-i";
      c.add_check(std::move(k));
    }
    c.add_check(dimension_sum_check("reduced_dimension", ring_, g, b, colors,
                                    {{{0, 3, {p - 2, i, p - 2 - i}}, {g, b - 1, rest}}}));
    c.children.push_back(node(g, b - 1, rest, depth + 1));
    c.cited.push_back("fusing a p-2 leg with another leg is an isomorphism of the smaller mapping class group "
                      "representations");
    c.finalize();
    return c;
  }

  RingSpec ring_;
  InductionBounds bounds_;
  std::map<Key, Certificate> memo_;
};

class GenericDriver {
 public:
  explicit GenericDriver(int max_color) : max_color_(max_color) {}

  Certificate node(std::vector<int> colors) {
    for (int c : colors) {
      if (c < 0) throw std::invalid_argument("colors must be nonnegative");
      if (c > max_color_)
        throw std::invalid_argument("color " + std::to_string(c) + " exceeds max_color bound " +
                                    std::to_string(max_color_));
    }
    std::sort(colors.begin(), colors.end());
    if (auto it = memo_.find(colors); it != memo_.end()) return it->second;
    Certificate c = build(colors);
    memo_.emplace(colors, c);
    return c;
  }

 private:
  Certificate build(const std::vector<int>& colors) {
    const RingSpec ring = RingSpec::generic();
    const int b = static_cast<int>(colors.size());
    const long long dim = dimension(0, b, colors, ring);
    if (dim <= 1) return vacuous_step(ring, "irreducible", 0, b, colors, dim).certificate;
    if (b == 4) return certify_v04(ring, colors[0], colors[1], colors[2], colors[3]);
    const auto split = choose_chain_split(0, b);
    if (!split) throw std::logic_error("no chain split for (0," + std::to_string(b) + ")");
    InductionStep step = chain_step(ring, InductionParams{0, colors, 0, split->b1, 0, split->b2});
    Certificate c = std::move(step.certificate);
    if (c.status == CertStatus::Vacuous || c.status == CertStatus::NotApplicable) return c;
    std::set<std::vector<int>> seen;
    for (auto& piece : step.pieces) {
      std::sort(piece.colors.begin(), piece.colors.end());
      if (!seen.insert(piece.colors).second) continue;
      c.children.push_back(node(piece.colors));
    }
    c.finalize();
    return c;
  }

  int max_color_;
  std::map<std::vector<int>, Certificate> memo_;
};

}  // namespace

Certificate certify_irreducible(int p, int g, int b, const std::vector<int>& colors, const InductionBounds& bounds) {
  if (g < 0 || b < 0) throw std::invalid_argument("genus and boundary count must be nonnegative");
  if (bounds.max_color <= 0 || bounds.max_depth <= 0) throw std::invalid_argument("bounds must be positive");
  Driver driver(RingSpec::root_of_unity(p), bounds);
  return driver.node(g, b, colors, 0);
}

Certificate certify_irreducible_generic(const std::vector<int>& colors, int max_color) {
  GenericDriver driver(max_color);
  return driver.node(colors);
}

}  // namespace tqft
