#include "tqft/coloring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace tqft {

UniTrivalentGraph::UniTrivalentGraph(std::vector<VertexKind> vertices, std::vector<GraphEdge> edges,
                                     std::vector<int> boundary_order)
    : vertices_(std::move(vertices)), boundary_order_(std::move(boundary_order)) {
  const int nv = static_cast<int>(vertices_.size());
  if (nv == 0) throw std::invalid_argument("graph has no vertices");
  std::vector<int> degree(static_cast<size_t>(nv), 0);
  std::vector<std::vector<int>> incident(static_cast<size_t>(nv));
  for (size_t e = 0; e < edges.size(); ++e) {
    const auto& ed = edges[e];
    if (ed.u < 0 || ed.u >= nv || ed.v < 0 || ed.v >= nv) throw std::invalid_argument("edge endpoint out of range");
    ++degree[static_cast<size_t>(ed.u)];
    ++degree[static_cast<size_t>(ed.v)];
    incident[static_cast<size_t>(ed.u)].push_back(static_cast<int>(e));
    if (ed.v != ed.u) incident[static_cast<size_t>(ed.v)].push_back(static_cast<int>(e));
  }
  int nb = 0;
  for (int v = 0; v < nv; ++v) {
    const bool boundary = vertices_[static_cast<size_t>(v)] == VertexKind::Boundary;
    nb += boundary;
    if (degree[static_cast<size_t>(v)] != (boundary ? 1 : 3))
      throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(degree[static_cast<size_t>(v)]) +
                                  (boundary ? ", boundary vertices need 1" : ", internal vertices need 3"));
  }
  {
    std::vector<int> sorted = boundary_order_;
    std::sort(sorted.begin(), sorted.end());
    const bool unique = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (static_cast<int>(sorted.size()) != nb || !unique) throw std::invalid_argument("boundary order must list every boundary vertex once");
    for (int v : sorted)
      if (v < 0 || v >= nv || vertices_[static_cast<size_t>(v)] != VertexKind::Boundary)
        throw std::invalid_argument("boundary order names a non-boundary vertex");
  }
  // breadth-first edge numbering from the first leg
  std::vector<int> new_index(edges.size(), -1);
  std::vector<char> seen(static_cast<size_t>(nv), 0);
  std::deque<int> queue;
  const int start = boundary_order_.empty() ? 0 : boundary_order_.front();
  queue.push_back(start);
  seen[static_cast<size_t>(start)] = 1;
  int next = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int e : incident[static_cast<size_t>(v)]) {
      if (new_index[static_cast<size_t>(e)] < 0) new_index[static_cast<size_t>(e)] = next++;
      const auto& ed = edges[static_cast<size_t>(e)];
      const int w = ed.u == v ? ed.v : ed.u;
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw std::invalid_argument("graph is not connected");
  edges_.resize(edges.size());
  for (size_t e = 0; e < edges.size(); ++e) edges_[static_cast<size_t>(new_index[e])] = std::move(edges[e]);

  vertex_edges_.assign(static_cast<size_t>(nv), {});
  for (size_t e = 0; e < edges_.size(); ++e) {
    vertex_edges_[static_cast<size_t>(edges_[e].u)].push_back(static_cast<int>(e));
    vertex_edges_[static_cast<size_t>(edges_[e].v)].push_back(static_cast<int>(e));
  }
  for (int v : boundary_order_) leg_edges_.push_back(vertex_edges_[static_cast<size_t>(v)].front());
  for (int v = 0; v < nv; ++v)
    if (vertices_[static_cast<size_t>(v)] == VertexKind::Boundary) vertex_edges_[static_cast<size_t>(v)].clear();
}

int UniTrivalentGraph::genus() const {
  return static_cast<int>(edges_.size()) - static_cast<int>(vertices_.size()) + 1;
}

int UniTrivalentGraph::find_edge(const std::string& label) const {
  for (size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].label == label) return static_cast<int>(e);
  return -1;
}

UniTrivalentGraph standard_graph(int g, int b) {
  using K = UniTrivalentGraph::VertexKind;
  if (g < 0 || b < 0) throw std::invalid_argument("genus and boundary count must be nonnegative");
  if (g == 0 && b < 2) throw std::invalid_argument("no uni-trivalent graph for (g,b) = (0," + std::to_string(b) + ")");
  if (g == 1 && b == 0) throw std::invalid_argument("no uni-trivalent graph for (g,b) = (1,0)");
  std::vector<K> vs;
  std::vector<GraphEdge> es;
  std::vector<int> order;
  auto vertex = [&](K k) {
    vs.push_back(k);
    return static_cast<int>(vs.size()) - 1;
  };
  auto edge = [&](int u, int v, std::string label) { es.push_back({u, v, std::move(label)}); };
  for (int k = 0; k < b; ++k) order.push_back(vertex(K::Boundary));
  auto leg = [&](int k) { return "leg" + std::to_string(k + 1); };
  if (g == 0 && b == 2) {
    edge(order[0], order[1], "leg1");
    return UniTrivalentGraph(vs, es, order);
  }
  // `tail` is the vertex whose free half-edge continues the spine; `tail_label`
  // names the edge that will leave it.
  int tail = -1;
  std::string tail_label;
  int spine = 0;
  auto next_spine = [&] { return "x" + std::to_string(++spine); };
  if (b == 1) {
    tail = order[0];
    tail_label = leg(0);
  } else if (b >= 2) {
    int u = vertex(K::Internal);
    edge(order[0], u, leg(0));
    edge(order[1], u, leg(1));
    if (g == 0 && b == 3) {
      edge(order[2], u, leg(2));
      return UniTrivalentGraph(vs, es, order);
    }
    // one leg per spine vertex; for g = 0 the last vertex carries two legs
    const int single_legs_end = g == 0 ? b - 2 : b;
    for (int k = 2; k < single_legs_end; ++k) {
      const int w = vertex(K::Internal);
      edge(u, w, next_spine());
      edge(order[static_cast<size_t>(k)], w, leg(k));
      u = w;
    }
    if (g == 0) {
      const int w = vertex(K::Internal);
      edge(u, w, next_spine());
      edge(order[static_cast<size_t>(b - 2)], w, leg(b - 2));
      edge(order[static_cast<size_t>(b - 1)], w, leg(b - 1));
      return UniTrivalentGraph(vs, es, order);
    }
    tail = u;
    tail_label = next_spine();
  }
  int loops = 0;
  auto loop_label = [&] { return "y" + std::to_string(++loops); };
  int bubbles = g - 1;
  if (b == 0) {
    // start with a lollipop
    const int z = vertex(K::Internal);
    edge(z, z, loop_label());
    tail = z;
    tail_label = next_spine();
    bubbles = g - 2;
  }
  for (int k = 0; k < bubbles; ++k) {
    const int x = vertex(K::Internal), y = vertex(K::Internal);
    edge(tail, x, tail_label);
    edge(x, y, loop_label());
    edge(x, y, loop_label());
    tail = y;
    tail_label = next_spine();
  }
  const int z = vertex(K::Internal);
  edge(tail, z, tail_label);
  edge(z, z, loop_label());
  return UniTrivalentGraph(vs, es, order);
}

namespace {

int generic_color_bound(const std::vector<int>& boundary) {
  return std::accumulate(boundary.begin(), boundary.end(), 0) / 2;
}

bool vertex_ok(const UniTrivalentGraph& g, int v, const std::vector<int>& colors, const RingSpec& ring) {
  const auto& es = g.vertex_edges()[static_cast<size_t>(v)];
  return is_admissible_triple(colors[static_cast<size_t>(es[0])], colors[static_cast<size_t>(es[1])],
                              colors[static_cast<size_t>(es[2])], ring);
}

}  // namespace

std::vector<AdmissibleColoring> enumerate_colorings(const UniTrivalentGraph& g, const std::vector<int>& boundary,
                                                    const RingSpec& ring) {
  if (static_cast<int>(boundary.size()) != g.boundary_count())
    throw std::invalid_argument("boundary has " + std::to_string(boundary.size()) + " colors, graph has " +
                                std::to_string(g.boundary_count()) + " legs");
  if (ring.is_generic() && g.genus() >= 1)
    throw std::domain_error("infinite-dimensional: generic mode needs genus 0, got genus " + std::to_string(g.genus()));
  for (int c : boundary)
    if (c < 0) throw std::invalid_argument("negative boundary color");
  const int ne = static_cast<int>(g.edges().size());
  const int max_color = ring.is_root_of_unity() ? ring.max_color() : generic_color_bound(boundary);
  std::vector<int> colors(static_cast<size_t>(ne), -1);
  for (int k = 0; k < g.boundary_count(); ++k) {
    int& slot = colors[static_cast<size_t>(g.leg_edge(k))];
    if (slot >= 0 && slot != boundary[static_cast<size_t>(k)]) return {};
    slot = boundary[static_cast<size_t>(k)];
    if (ring.is_root_of_unity() && slot > ring.max_color()) return {};
  }
  std::vector<int> free_edges;
  for (int e = 0; e < ne; ++e)
    if (colors[static_cast<size_t>(e)] < 0) free_edges.push_back(e);
  // checks[t] = internal vertices whose last free edge is free_edges[t]
  std::vector<std::vector<int>> checks(free_edges.size());
  std::vector<int> slot_of(static_cast<size_t>(ne), -1);
  for (size_t t = 0; t < free_edges.size(); ++t) slot_of[static_cast<size_t>(free_edges[t])] = static_cast<int>(t);
  const int nv = static_cast<int>(g.vertices().size());
  for (int v = 0; v < nv; ++v) {
    const auto& es = g.vertex_edges()[static_cast<size_t>(v)];
    if (es.empty()) continue;
    int last = -1;
    for (int e : es) last = std::max(last, slot_of[static_cast<size_t>(e)]);
    if (last < 0) {
      if (!vertex_ok(g, v, colors, ring)) return {};
    } else {
      checks[static_cast<size_t>(last)].push_back(v);
    }
  }
  std::vector<AdmissibleColoring> out;
  const size_t depth = free_edges.size();
  auto rec = [&](auto&& self, size_t t) -> void {
    if (t == depth) {
      out.push_back(colors);
      return;
    }
    const int e = free_edges[t];
    for (int c = 0; c <= max_color; ++c) {
      colors[static_cast<size_t>(e)] = c;
      bool ok = true;
      for (int v : checks[t])
        if (!vertex_ok(g, v, colors, ring)) {
          ok = false;
          break;
        }
      if (ok) self(self, t + 1);
    }
    colors[static_cast<size_t>(e)] = -1;
  };
  rec(rec, 0);
  return out;
}

namespace {

using Vec = std::vector<long long>;

Vec step_vertex(const Vec& in, int leg, int max_color, const RingSpec& ring) {
  Vec out(static_cast<size_t>(max_color + 1), 0);
  for (int x = 0; x <= max_color; ++x) {
    if (!in[static_cast<size_t>(x)]) continue;
    for (int y = 0; y <= max_color; ++y)
      if (is_admissible_triple(x, leg, y, ring)) out[static_cast<size_t>(y)] += in[static_cast<size_t>(x)];
  }
  return out;
}

Vec step_bubble(const Vec& in, int max_color, const RingSpec& ring) {
  // weight(x, y) = #{(e1, e2) : (x,e1,e2) and (e1,e2,y) admissible}
  Vec out(static_cast<size_t>(max_color + 1), 0);
  for (int x = 0; x <= max_color; ++x) {
    if (!in[static_cast<size_t>(x)]) continue;
    for (int e1 = 0; e1 <= max_color; ++e1)
      for (int e2 = 0; e2 <= max_color; ++e2) {
        if (!is_admissible_triple(x, e1, e2, ring)) continue;
        for (int y = 0; y <= max_color; ++y)
          if (is_admissible_triple(e1, e2, y, ring)) out[static_cast<size_t>(y)] += in[static_cast<size_t>(x)];
      }
  }
  return out;
}

long long lollipop_weight(int x, int max_color, const RingSpec& ring) {
  long long w = 0;
  for (int j = 0; j <= max_color; ++j) w += is_admissible_triple(x, j, j, ring);
  return w;
}

void require_length(int b, const std::vector<int>& boundary) {
  if (static_cast<int>(boundary.size()) != b)
    throw std::invalid_argument("expected " + std::to_string(b) + " boundary colors, got " +
                                std::to_string(boundary.size()));
}

/// Returns true and sets `out` for the degenerate surfaces.
bool degenerate_dimension(int g, int b, const std::vector<int>& c, const RingSpec& ring, long long& out) {
  auto in_range = [&](int x) { return x >= 0 && (ring.is_generic() || x <= ring.max_color()); };
  if (g == 0 && b == 0) return out = 1, true;
  if (g == 0 && b == 1) return out = c[0] == 0 ? 1 : 0, true;
  if (g == 0 && b == 2) return out = (c[0] == c[1] && in_range(c[0])) ? 1 : 0, true;
  if (g == 1 && b == 0) {
    if (ring.is_generic()) throw std::domain_error("infinite-dimensional: generic mode needs genus 0, got genus 1");
    return out = ring.p() - 1, true;
  }
  return false;
}

}  // namespace

long long dimension(int g, int b, const std::vector<int>& boundary, const RingSpec& ring) {
  if (g < 0 || b < 0) throw std::invalid_argument("genus and boundary count must be nonnegative");
  require_length(b, boundary);
  for (int c : boundary)
    if (c < 0) throw std::invalid_argument("negative boundary color");
  long long d = 0;
  if (degenerate_dimension(g, b, boundary, ring, d)) return d;
  if (ring.is_generic() && g >= 1)
    throw std::domain_error("infinite-dimensional: generic mode needs genus 0, got genus " + std::to_string(g));
  if (ring.is_root_of_unity())
    for (int c : boundary)
      if (c > ring.max_color()) return 0;
  const int max_color = ring.is_root_of_unity() ? ring.max_color() : generic_color_bound(boundary);
  const size_t width = static_cast<size_t>(max_color + 1);
  Vec state(width, 0);
  if (g == 0) {
    for (int x = 0; x <= max_color; ++x) state[static_cast<size_t>(x)] = is_admissible_triple(boundary[0], boundary[1], x, ring);
    for (int k = 2; k < b - 1; ++k) state = step_vertex(state, boundary[static_cast<size_t>(k)], max_color, ring);
    // state[x] counts colorings with the last spine value x; x must equal leg n
    return boundary[static_cast<size_t>(b - 1)] <= max_color ? state[static_cast<size_t>(boundary[static_cast<size_t>(b - 1)])] : 0;
  }
  int bubbles = g - 1;
  if (b == 0) {
    for (int x = 0; x <= max_color; ++x) state[static_cast<size_t>(x)] = lollipop_weight(x, max_color, ring);
    bubbles = g - 2;
  } else if (b == 1) {
    state[static_cast<size_t>(boundary[0])] = 1;
  } else {
    for (int x = 0; x <= max_color; ++x) state[static_cast<size_t>(x)] = is_admissible_triple(boundary[0], boundary[1], x, ring);
    for (int k = 2; k < b; ++k) state = step_vertex(state, boundary[static_cast<size_t>(k)], max_color, ring);
  }
  for (int k = 0; k < bubbles; ++k) state = step_bubble(state, max_color, ring);
  long long total = 0;
  for (int x = 0; x <= max_color; ++x) total += state[static_cast<size_t>(x)] * lollipop_weight(x, max_color, ring);
  return total;
}

long long dimension_bruteforce(int g, int b, const std::vector<int>& boundary, const RingSpec& ring) {
  require_length(b, boundary);
  long long d = 0;
  if (degenerate_dimension(g, b, boundary, ring, d)) return d;
  return static_cast<long long>(enumerate_colorings(standard_graph(g, b), boundary, ring).size());
}

nlohmann::json to_json(const UniTrivalentGraph& g) {
  nlohmann::json vs = nlohmann::json::array(), es = nlohmann::json::array();
  for (size_t v = 0; v < g.vertices().size(); ++v)
    vs.push_back({{"id", v}, {"kind", g.vertices()[v] == UniTrivalentGraph::VertexKind::Boundary ? "boundary" : "internal"}});
  for (const auto& e : g.edges()) es.push_back({{"u", e.u}, {"v", e.v}, {"label", e.label}});
  return {{"vertices", vs}, {"edges", es}, {"boundary_order", g.boundary_order()}};
}

UniTrivalentGraph graph_from_json(const nlohmann::json& j) {
  const auto& vj = j.at("vertices");
  std::vector<UniTrivalentGraph::VertexKind> vs(vj.size(), UniTrivalentGraph::VertexKind::Internal);
  for (const auto& v : vj) {
    const size_t id = v.at("id").get<size_t>();
    if (id >= vs.size()) throw std::invalid_argument("vertex id out of range");
    const std::string kind = v.at("kind").get<std::string>();
    if (kind != "boundary" && kind != "internal") throw std::invalid_argument("unknown vertex kind: " + kind);
    vs[id] = kind == "boundary" ? UniTrivalentGraph::VertexKind::Boundary : UniTrivalentGraph::VertexKind::Internal;
  }
  std::vector<GraphEdge> es;
  for (const auto& e : j.at("edges")) {
    if (e.is_array())
      es.push_back({e.at(0).get<int>(), e.at(1).get<int>(), ""});
    else
      es.push_back({e.at("u").get<int>(), e.at("v").get<int>(), e.value("label", std::string())});
  }
  return UniTrivalentGraph(vs, es, j.at("boundary_order").get<std::vector<int>>());
}

}  // namespace tqft
