#pragma once

// Theta nets, tetrahedron symbols, 6j coefficients and fusion matrices for the
// unnormalized graph basis.  Values are exact Fractions (Laurent polynomials
// over quantum-integer denominators in generic mode, field elements at a root
// of unity).

#include <array>
#include <vector>

#include "tqft/admissible.hpp"
#include "tqft/fraction.hpp"
#include "tqft/ring_matrix.hpp"

namespace tqft {

/// Tetrahedron with vertex triples (a,b,i), (a,d,j), (b,c,j), (c,d,i).
struct TetFrame {
  int a = 0, b = 0, i = 0, c = 0, d = 0, j = 0;
  /// Vertex half-sums.
  std::array<int, 4> m{};
  /// Face half-sums.
  std::array<int, 3> n{};
  int z_min = 0, z_max = 0;

  /// Throws std::invalid_argument when a vertex triple is inadmissible.
  static TetFrame make(int a, int b, int i, int c, int d, int j, const RingSpec& ring);
  int summand_count() const { return z_max >= z_min ? z_max - z_min + 1 : 0; }
  /// The z-th summand as a factored product.
  FactoredScalar summand(int z) const;
};

/// Theta net <a,b,c>.  Throws std::invalid_argument on inadmissible triples.
Fraction theta(int a, int b, int c, const RingSpec& ring);
Fraction tet(int a, int b, int i, int c, int d, int j, const RingSpec& ring);
/// Coefficient of w_j in v_i: loop(j) * tet / (theta(a,d,j) theta(b,c,j)).
Fraction sixj(int a, int b, int i, int c, int d, int j, const RingSpec& ring);

/// Admissible internal colors of the v-basis ({i}: (a,b,i), (c,d,i)) in
/// ascending order.
std::vector<int> v_basis_colors(int a, int b, int c, int d, const RingSpec& ring);
/// Admissible internal colors of the w-basis ({j}: (a,d,j), (b,c,j)).
std::vector<int> w_basis_colors(int a, int b, int c, int d, const RingSpec& ring);

/// Entry (row j, column i) = sixj(a,b,i;c,d,j), both indices ascending.
/// Throws std::invalid_argument when the space is zero-dimensional.
RingMatrix fusion_matrix(int a, int b, int c, int d, const RingSpec& ring);

}  // namespace tqft
