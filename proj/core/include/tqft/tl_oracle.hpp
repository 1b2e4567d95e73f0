#pragma once

// Brute-force Kauffman bracket evaluation.
//
// Diagrams are layered strand programs read top to bottom: each operation acts
// on a contiguous range of the current strands.  The evaluator keeps a linear
// combination of "partner vectors" (how the current strand ends are joined by
// the arcs drawn so far) and multiplies in the loop value for every closed
// component.  Colored trivalent networks are expressed in the same language at
// the level of strand bundles and expanded through Jones-Wenzl projectors.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tqft/fraction.hpp"

namespace tqft {

inline constexpr int kDefaultStrandBound = 24;

/// A perfect matching on 2n points: points 0..n-1 are the bottom (input)
/// endpoints and n..2n-1 the top (output) endpoints, both left to right.
using Matching = std::vector<int>;

/// Linear combination of noncrossing matchings on n strands.
class TLElement {
 public:
  TLElement() = default;
  TLElement(const RingSpec& ring, int n) : ring_(ring), n_(n) {}

  static TLElement identity(const RingSpec& ring, int n);
  /// Cup-cap generator e_k joining strands k, k+1 (0-based) on each side.
  static TLElement generator(const RingSpec& ring, int n, int k);

  const RingSpec& ring() const { return ring_; }
  int strands() const { return n_; }
  const std::map<Matching, Fraction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of a basis matching (zero if absent).
  Fraction coefficient(const Matching& m) const;

  void add_term(const Matching& m, const Fraction& c);

  TLElement& operator+=(const TLElement& o);
  TLElement& operator*=(const Fraction& c);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b);
  /// a * b stacks a on top of b: b's outputs feed a's inputs.
  friend TLElement operator*(const TLElement& a, const TLElement& b);
  friend bool operator==(const TLElement& a, const TLElement& b);

  /// x (tensor) identity on extra strands to the right.
  TLElement extended(int extra) const;

 private:
  RingSpec ring_;
  int n_ = 0;
  std::map<Matching, Fraction> terms_;
};

/// The Jones-Wenzl projector f_n.  Throws std::out_of_range when n > p-2 at a
/// root of unity.
const TLElement& jones_wenzl(int n, const RingSpec& ring);

struct DiagramOp {
  enum class Kind { Cup, Cap, Cross, Projector };
  Kind kind = Kind::Cup;
  int pos = 0;
  /// Cross: true resolves as A*id + A^{-1}*e.
  bool positive = true;
  /// Projector: number of strands covered.
  int n = 0;

  static DiagramOp cup(int pos) { return {Kind::Cup, pos, true, 0}; }
  static DiagramOp cap(int pos) { return {Kind::Cap, pos, true, 0}; }
  static DiagramOp cross(int pos, bool positive) { return {Kind::Cross, pos, positive, 0}; }
  static DiagramOp projector(int pos, int n) { return {Kind::Projector, pos, true, n}; }
  friend bool operator==(const DiagramOp&, const DiagramOp&) = default;
};

/// Layered planar diagram.  `boundary` is the number of strands entering at
/// the top; closed diagrams have boundary 0 and end with zero strands.
struct PlanarDiagram {
  int boundary = 0;
  std::vector<DiagramOp> ops;

  int crossing_count() const;
};

/// Kauffman bracket of a closed diagram.  Without projector boxes the value is
/// a Laurent polynomial; projectors can introduce quantum-integer
/// denominators.  Throws std::invalid_argument for open or malformed programs.
Fraction resolve_bracket(const PlanarDiagram& d, const RingSpec& ring);

/// Colored network in bundle form.  Each bundle is a group of parallel
/// strands carrying one edge color.
struct NetworkOp {
  enum class Kind { Cup, Cap, Split, Merge };
  Kind kind = Kind::Cup;
  int pos = 0;
  /// Cup: color of the new edge.  Merge: color of the merged edge.
  int color = 0;
  /// Split: colors of the two new bundles, left then right.
  int left = 0, right = 0;

  static NetworkOp cup(int pos, int c) { return {Kind::Cup, pos, c, 0, 0}; }
  static NetworkOp cap(int pos) { return {Kind::Cap, pos, 0, 0, 0}; }
  static NetworkOp split(int pos, int j, int k) { return {Kind::Split, pos, 0, j, k}; }
  static NetworkOp merge(int pos, int i) { return {Kind::Merge, pos, i, 0, 0}; }
  friend bool operator==(const NetworkOp&, const NetworkOp&) = default;
};

struct ColoredNetwork {
  std::vector<NetworkOp> ops;

  /// Number of strands after expansion: the sum of the edge colors.
  int strand_count() const;

  static ColoredNetwork unknot(int c);
  static ColoredNetwork theta(int a, int b, int c);
  /// Tetrahedron with vertex triples (a,b,i), (c,d,i), (b,c,j), (a,d,j).
  static ColoredNetwork tetrahedron(int a, int b, int i, int c, int d, int j);
};

/// Expands every bundle through projectors and evaluates the bracket.
/// Throws std::invalid_argument on inadmissible vertices or unbalanced
/// programs and std::length_error when strand_count() exceeds the bound.
Fraction evaluate_network(const ColoredNetwork& g, const RingSpec& ring, int strand_bound = kDefaultStrandBound);

nlohmann::json to_json(const PlanarDiagram& d);
PlanarDiagram planar_diagram_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ColoredNetwork& g);
ColoredNetwork colored_network_from_json(const nlohmann::json& j);

}  // namespace tqft
