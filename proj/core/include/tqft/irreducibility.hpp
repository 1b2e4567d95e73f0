#pragma once

// Irreducibility certificates for the quantum SO(3) representations of
// mapping class groups at odd prime level.  Two decompositions into
// eigenspaces of commuting twists give a bipartite graph; connectivity of
// that graph (strong connectivity when no Hermitian pairing exists) implies
// irreducibility.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tqft/certificate.hpp"
#include "tqft/ring_matrix.hpp"

namespace tqft {

struct DistinctnessResult {
  bool distinct = true;
  /// First pair (i < j) with values[i] / values[j] == 1.
  int first = -1, second = -1;
};

/// Pairwise ratio test.  Throws std::invalid_argument on a zero value.
DistinctnessResult multiplicity_free_check(const std::vector<Scalar>& values);

struct EdgeWitness {
  enum class Kind { Entry, Triple, Coloring };
  Kind kind = Kind::Entry;
  /// Entry: the nonzero transition coefficient.
  Fraction value;
  /// Triple: the admissible triple joining the two summands.
  std::array<int, 3> triple{};
  /// Coloring: an admissible coloring of standard_graph(genus, 0) lying in
  /// both summands, which are cut along the dual curves of `cut_edges`
  /// carrying `cut_colors`.
  int genus = 0;
  std::vector<int> coloring;
  std::array<int, 2> cut_edges{};
  std::array<int, 2> cut_colors{};
};

struct DecompositionEdge {
  enum class Direction { LeftToRight, RightToLeft, Both };
  Direction direction = Direction::Both;
  int left = 0, right = 0;
  EdgeWitness witness;
};

struct DecompositionGraph {
  RingSpec ring;
  std::vector<std::string> left, right;
  std::vector<DecompositionEdge> edges;

  /// Throws std::invalid_argument when an edge index is out of range or the
  /// witness does not certify the edge.
  void add_edge(DecompositionEdge e);
};

/// Left summands are the columns of F (the v-basis), right summands its rows.
/// Edge v_i -> w_j when F(j,i) != 0 and w_j -> v_i when F^{-1}(i,j) != 0.
/// Throws RingError when F is not invertible.
DecompositionGraph build_decomposition_graph(const RingMatrix& f);
/// As above with a known exact inverse; throws std::invalid_argument unless
/// f * f_inverse and f_inverse * f are identities.
DecompositionGraph build_decomposition_graph(const RingMatrix& f, const RingMatrix& f_inverse);

enum class ConnectivityMode { Undirected, Strong };
std::string to_string(ConnectivityMode m);

struct ConnectivityResult {
  bool connected = false;
  /// Components (undirected) or strongly connected components; vertices are
  /// "L<k>" / "R<k>" indices into the graph's label lists.
  std::vector<std::vector<std::string>> components;
};

/// Throws std::invalid_argument on an empty graph.
ConnectivityResult connectivity(const DecompositionGraph& g, ConnectivityMode mode);

nlohmann::json to_json(const DecompositionGraph& g);
DecompositionGraph decomposition_graph_from_json(const nlohmann::json& j);
/// True when every edge witness re-verifies (nonzero entry, admissible triple
/// or admissible coloring).
bool edge_witness_valid(const EdgeWitness& w, const RingSpec& ring);

/// Four-holed sphere V_{0,4;a,b,c,d}: distinct twist spectra for both pants
/// decompositions, exact fusion round trip, connectivity of the decomposition
/// graph (undirected at a root of unity, strong in generic mode) and the
/// nonvanishing of every coefficient of v_{i0}, i0 the smallest v color.
Certificate certify_v04(const RingSpec& ring, int a, int b, int c, int d);

/// One-holed torus V_{1,1;2a}: distinct Vandermonde nodes
/// (-1)^j A^{(j+a)(j+a+2)} for 0 <= j <= p-a-2; the Hopf pairing
/// nonvanishing is an assumption.  Throws std::invalid_argument unless
/// 1 <= a <= (p-3)/2.
Certificate certify_torus(int p, int a);

/// Induction steps, each built from admissible-triple combinatorics.
///  * Hub: V_{g,2;a,b} cut along a separating curve (pieces V_{g,1;c} (x)
///    V_{0,3;c,a,b}) versus a pair of curves (pieces V_{g-1,2;i,j} (x)
///    V_{0,4;i,j,a,b}); every piece meets B_{h,h}, h = (p-3)/2.
///  * Closed: V_{g,0} cut along two nonseparating curves (pieces
///    V_{g-1,2;i,i}); complete bipartite.
///  * Chain: V_{g,b} with boundary color a split as (g1,b1) + (g2,b2) with
///    b = b1+b2+1; A_i and B_j meet iff (i,j,a) admissible, and consecutive
///    A_i, A_{i-2} share a neighbour.
enum class InductionKind { Hub, Closed, Chain };
std::string to_string(InductionKind k);
InductionKind induction_kind_from_string(const std::string& s);

struct InductionParams {
  int g = 0;
  /// Boundary colors: (a, b) for Hub, empty for Closed, c1 then c2 then a
  /// for Chain.
  std::vector<int> colors;
  /// Chain only: the split.
  int g1 = 0, b1 = 0, g2 = 0, b2 = 0;
};

struct InductionStep {
  DecompositionGraph graph;
  Certificate certificate;
  /// Pieces whose irreducibility the step assumes: (g, b, colors).
  struct Piece {
    int g = 0, b = 0;
    std::vector<int> colors;
  };
  std::vector<Piece> pieces;
};

/// Throws std::invalid_argument when the parameters do not fit the step.
InductionStep induction_step_graph(InductionKind kind, int p, const InductionParams& params);

struct ChainSplit {
  int g1 = 0, b1 = 0, g2 = 0, b2 = 0;
};
/// Split with all four pieces lexicographically below (g, b): minimal g1,
/// then minimal b1.  Empty when none exists.
std::optional<ChainSplit> choose_chain_split(int g, int b);

struct InductionBounds {
  int max_color = 12;
  int max_depth = 16;
};

/// Tree certificate for V_{g,b;colors} at level p: p-2 reduction, base cases
/// and induction steps, with shared subtrees recomputed once.  Throws
/// std::invalid_argument naming the bound when a color or the depth exceeds
/// `bounds`.
Certificate certify_irreducible(int p, int g, int b, const std::vector<int>& colors,
                                const InductionBounds& bounds = {});

/// Genus-0 tree in generic mode: certify_v04 for four holes and chain steps
/// with two-way edges above, requiring strong connectivity throughout.
Certificate certify_irreducible_generic(const std::vector<int>& colors, int max_color = 12);

}  // namespace tqft
