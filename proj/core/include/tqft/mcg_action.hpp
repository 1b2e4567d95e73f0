#pragma once

// Dehn twist matrices on graph bases.  Twists are taken up to the usual
// central scalar: a curve transverse to an edge colored c acts by
// mu_c = (-1)^c A^{c(c+2)}.

#include <string>
#include <utility>
#include <vector>

#include "tqft/coloring.hpp"
#include "tqft/ring_matrix.hpp"

namespace tqft {

struct TwistEigenvalue {
  int color = 0;
  Scalar value;

  static TwistEigenvalue of(int c, const RingSpec& ring);
};

/// (-1)^c A^{c(c+2)}.
Scalar twist_eigenvalue(int c, const RingSpec& ring);

struct OmegaCoefficients {
  std::vector<std::pair<int, Scalar>> terms;
  /// The dropped global factor, recorded for reference.
  std::string note;
};

/// (i, (-1)^i [i+1]) for 0 <= i <= p-2 at the root of unity of level p.
OmegaCoefficients omega_coefficients(int p);
/// As above; throws std::domain_error in generic mode.
OmegaCoefficients omega_coefficients(const RingSpec& ring);

/// Diagonal matrix of mu_{c(edge)} over enumerate_colorings(g, boundary).
/// `inverse` uses mu^{-1}.  Throws std::invalid_argument for a bad edge index.
RingMatrix edge_twist_matrix(const UniTrivalentGraph& g, int edge, const std::vector<int>& boundary,
                             const RingSpec& ring, bool inverse = false);

/// Twist about the curve around legs b, c of the 4-holed sphere written in
/// the v-basis: F^{-1} D F with F = fusion_matrix(a,b,c,d).
RingMatrix dual_twist_matrix(int a, int b, int c, int d, const RingSpec& ring, bool inverse = false);

/// Twist about a curve enclosing punctures i < j (1-based) of the n-holed
/// sphere in the caterpillar basis of standard_graph(0, n).  The punctures
/// must be cyclically adjacent (j = i+1, or (1, n)); other pairs need braiding
/// and throw std::invalid_argument.
RingMatrix pure_braid_twist(int n, int i, int j, const std::vector<int>& boundary, const RingSpec& ring,
                            bool inverse = false);

/// Number of F-moves the planner uses to make the pair (i, j) edge-transverse.
int pure_braid_move_count(int n, int i, int j);

}  // namespace tqft
