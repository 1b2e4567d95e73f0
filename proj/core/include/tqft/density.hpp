#pragma once

// Zariski density of genus-0 braid group images at transcendental A:
// nonvanishing of tetrahedron coefficients, infinite-order twists, the scalar
// weight analysis for the four-holed sphere, spectral separation of summands
// and the inductive assembly over the number of punctures.

#include <string>
#include <vector>

#include "tqft/certificate.hpp"
#include "tqft/fraction.hpp"

namespace tqft {

struct TetDegreeReport {
  bool nonzero = false;
  Fraction value;
  /// Leading A-degree of each z-summand (numerator degree minus denominator
  /// degree), in z order.
  std::vector<int> summand_degrees;
  /// The maximal degree occurs in exactly one summand.
  bool unique_maximum = false;
};

/// Exact tet in generic mode; the degree data is diagnostic.  Throws
/// std::invalid_argument on an inadmissible frame.
TetDegreeReport tet_nonzero_generic(int a, int b, int i, int c, int d, int j);

/// -A^{4i+8}.  Throws std::invalid_argument for i < 0.
Scalar infinite_order_ratio(int i);
/// mu_{i+2} / mu_i computed from the twist eigenvalues.
Scalar twist_ratio(int i);

/// Eigenvalue exponents of one twist, up to a dropped common constant.
struct WeightScalarSet {
  std::vector<long long> exponents;
};

enum class WeightVerdict { SlFull, Inconclusive };
std::string to_string(WeightVerdict v);

struct WeightAnalysis {
  WeightVerdict verdict = WeightVerdict::Inconclusive;
  int rank = 0;  // n+1
  /// lambda_0 - lambda_1 is not any other pairwise difference.
  bool non_repetitive = false;
  /// Every pairwise difference is distinct (stronger, diagnostic).
  bool all_differences_distinct = false;
  /// lambda_0 - lambda_1 is strictly the smallest gap to lambda_0.
  bool minimal_gap = false;
  /// lambda_0 - lambda_1 is no positive integer combination of the
  /// lambda_0 - lambda_t, t >= 2.
  bool indecomposable = false;
  /// First repeated pair of differences, as index quadruples, when
  /// non_repetitive fails.
  std::vector<int> repetition_witness;
};

/// Requires the exponents strictly increasing with at least two entries;
/// throws std::invalid_argument otherwise.
WeightAnalysis weight_scalar_analysis(const WeightScalarSet& w);

/// Interval of internal colors i (step 2) with the exponents i^2 and the
/// exact twist exponents i(i+2) = (i+1)^2 - 1.
struct EigenvalueSet {
  std::vector<int> colors;
  std::vector<long long> exponents;
  std::vector<long long> twist_exponents;
};

/// max{c_n - sum_{k=2}^{n-1} c_k, |a - c_1|} <= i <= min{a + c_1, sum_{k=2}^n c_k},
/// i = a + c_1 mod 2.  `c` holds c_1..c_n (n >= 2).  Empty when the total
/// parity of a and c is odd.  Throws std::invalid_argument on negative colors.
EigenvalueSet eigenvalue_set(int a, const std::vector<int>& c);

struct NonisoResult {
  bool separated = true;
  struct Pair {
    int a = 0, a2 = 0;
    std::string reason;  // "cardinality", "ratios", or "not_separated"
  };
  std::vector<Pair> pairs;
  /// Values of a removed for parity.
  std::vector<int> skipped;
};

/// Multiset of differences x - y over ordered pairs x != y.
std::vector<long long> ratio_exponents(const std::vector<long long>& e);

/// Separates the spaces V_{0,n+1;a,c_1..c_n} over 0 <= a <= 2 c_1 by the
/// twist about the curve around the first two holes: different cardinality
/// or different ratio multisets (also against the inverted multiset, which
/// covers duals).  Values of a with odd total parity or an empty eigenvalue
/// set are skipped.  Throws std::invalid_argument unless c has at least three
/// nondecreasing entries.
NonisoResult noniso_check(const std::vector<int>& c);
/// Explicit a-range.
NonisoResult noniso_check(const std::vector<int>& c, const std::vector<int>& a_values);
/// Compares explicit exponent sets pairwise.
NonisoResult noniso_compare(const std::vector<std::pair<int, std::vector<long long>>>& sets);

struct DimensionConditionResult {
  bool ok = true;
  std::vector<int> ones, twos;
};
/// At most one entry equal to 1 and at most one equal to 2.
DimensionConditionResult dimension_conditions(const std::vector<long long>& dims);

/// Density tree for V_{0,n;colors} in generic mode.
Certificate certify_dense(int n, const std::vector<int>& colors, int max_color = 12);

}  // namespace tqft
