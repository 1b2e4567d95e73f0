#pragma once

// Uni-trivalent graphs, admissible colorings and dimensions of the TQFT
// spaces V_{g,b;c}.

#include <string>
#include <vector>

#include <json.hpp>

#include "tqft/admissible.hpp"

namespace tqft {

struct GraphEdge {
  int u = 0, v = 0;
  std::string label;
};

class UniTrivalentGraph {
 public:
  enum class VertexKind { Boundary, Internal };

  UniTrivalentGraph() = default;
  /// Validates degrees and connectivity, orders boundary vertices by
  /// `boundary_order` and renumbers edges breadth-first from the first leg.
  /// Throws std::invalid_argument on malformed input.
  UniTrivalentGraph(std::vector<VertexKind> vertices, std::vector<GraphEdge> edges, std::vector<int> boundary_order);

  const std::vector<VertexKind>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<int>& boundary_order() const { return boundary_order_; }

  int genus() const;
  int boundary_count() const { return static_cast<int>(boundary_order_.size()); }
  /// Edge index of the leg at boundary position k (0-based).
  int leg_edge(int k) const { return leg_edges_[static_cast<size_t>(k)]; }
  /// Edge index carrying `label`, or -1.
  int find_edge(const std::string& label) const;
  /// For each internal vertex, its three incident edge indices (a self-loop
  /// appears twice).
  const std::vector<std::vector<int>>& vertex_edges() const { return vertex_edges_; }

 private:
  std::vector<VertexKind> vertices_;
  std::vector<GraphEdge> edges_;
  std::vector<int> boundary_order_;
  std::vector<int> leg_edges_;
  std::vector<std::vector<int>> vertex_edges_;
};

/// Caterpillar tree for g = 0 (legs 1,2 on the first vertex, legs n-1,n on the
/// last, internal edges x1..x_{n-3}); for g >= 1 the legs feed a spine that
/// passes g-1 bubbles and ends in a lollipop (for b = 0 the spine starts with
/// a lollipop instead).  (0,2) is a single edge.  Throws std::invalid_argument
/// for (0,0), (0,1) and (1,0), which have no uni-trivalent graph.
UniTrivalentGraph standard_graph(int g, int b);

/// Edge colors aligned with graph.edges().
using AdmissibleColoring = std::vector<int>;

/// All admissible colorings with the given leg colors in lexicographic order
/// of the edge order.  Throws std::invalid_argument when the boundary length
/// is wrong and std::domain_error ("infinite-dimensional") in generic mode
/// with genus >= 1.
std::vector<AdmissibleColoring> enumerate_colorings(const UniTrivalentGraph& g, const std::vector<int>& boundary,
                                                    const RingSpec& ring);

/// dim V_{g,b;c} by a transfer matrix along the standard graph, with the
/// degenerate cases (0,0), (0,1), (0,2), (1,0) handled directly.
long long dimension(int g, int b, const std::vector<int>& boundary, const RingSpec& ring);
/// The same count by brute-force enumeration on standard_graph(g, b).
long long dimension_bruteforce(int g, int b, const std::vector<int>& boundary, const RingSpec& ring);

nlohmann::json to_json(const UniTrivalentGraph& g);
UniTrivalentGraph graph_from_json(const nlohmann::json& j);

}  // namespace tqft
