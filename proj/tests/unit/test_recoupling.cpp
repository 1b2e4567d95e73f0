#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tqft/admissible.hpp"
#include "tqft/recoupling.hpp"
#include "tqft/tl_oracle.hpp"

using namespace tqft;

namespace {

const RingSpec G = RingSpec::generic();

bool tet_frame_admissible(int a, int b, int i, int c, int d, int j, const RingSpec& r) {
  return is_admissible_triple(a, b, i, r) && is_admissible_triple(c, d, i, r) && is_admissible_triple(a, d, j, r) &&
         is_admissible_triple(b, c, j, r);
}

}  // namespace

TEST(Theta, Examples) {
  EXPECT_EQ(theta(0, 0, 0, G), Fraction::one(G));
  EXPECT_EQ(theta(1, 1, 0, G), evaluate_network(ColoredNetwork::theta(1, 1, 0), G));
  EXPECT_EQ(theta(1, 1, 0, G), Fraction(loop_value(1, G)));
  EXPECT_EQ(theta(1, 1, 2, G), evaluate_network(ColoredNetwork::theta(1, 1, 2), G));
  EXPECT_EQ(theta(1, 1, 2, G), Fraction(quantum_integer(3, G)));
}

TEST(Theta, InadmissibleIsAnError) {
  EXPECT_THROW(theta(1, 1, 1, G), std::invalid_argument);
  EXPECT_THROW(theta(3, 3, 2, RingSpec::root_of_unity(5)), std::invalid_argument);
}

TEST(Theta, SymmetricInItsColors) {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c) {
        if (!is_admissible_triple(a, b, c, G)) continue;
        EXPECT_EQ(theta(a, b, c, G), theta(b, c, a, G));
        EXPECT_EQ(theta(a, b, c, G), theta(b, a, c, G));
      }
}

TEST(Tet, ZeroEdgeCollapsesToTheta) {
  for (const RingSpec& r : {G, RingSpec::root_of_unity(7)})
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (int i = 0; i <= 4; ++i) {
          if (!is_admissible_triple(a, b, i, r)) continue;
          EXPECT_EQ(tet(a, b, i, b, a, 0, r), theta(a, b, i, r)) << a << b << i;
        }
}

TEST(Tet, AgreesWithNetworkOracle) {
  EXPECT_EQ(tet(1, 1, 2, 1, 1, 2, G), evaluate_network(ColoredNetwork::tetrahedron(1, 1, 2, 1, 1, 2), G));
  EXPECT_EQ(tet(2, 2, 2, 2, 2, 2, G), evaluate_network(ColoredNetwork::tetrahedron(2, 2, 2, 2, 2, 2), G));
}

TEST(Tet, InadmissibleFrame) { EXPECT_THROW(tet(1, 1, 2, 1, 1, 1, G), std::invalid_argument); }

TEST(Tet, SpecializationCommutesWithSubstitution) {
  const RingSpec r = RingSpec::root_of_unity(7);
  for (int a = 1; a <= 3; ++a)
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j) {
        if (!tet_frame_admissible(a, a, i, a, a, j, r)) continue;
        EXPECT_EQ(tet(a, a, i, a, a, j, G).substitute(r), tet(a, a, i, a, a, j, r));
      }
}

TEST(SixJ, FromTetAndThetas) {
  for (int j : {0, 2}) {
    const Fraction expected = Fraction(loop_value(j, G)) * evaluate_network(ColoredNetwork::tetrahedron(1, 1, 2, 1, 1, j), G) *
                              (evaluate_network(ColoredNetwork::theta(1, 1, j), G) *
                               evaluate_network(ColoredNetwork::theta(1, 1, j), G))
                                  .inverse();
    EXPECT_EQ(sixj(1, 1, 2, 1, 1, j, G), expected);
  }
  EXPECT_THROW(sixj(1, 1, 1, 1, 1, 0, G), std::invalid_argument);
}

TEST(FusionMatrix, DimensionOneIsInvertible) {
  const RingMatrix f = fusion_matrix(1, 1, 3, 3, RingSpec::root_of_unity(5));
  ASSERT_EQ(f.rows(), 1u);
  ASSERT_EQ(f.cols(), 1u);
  EXPECT_FALSE(f(0, 0).is_zero());
}

TEST(FusionMatrix, OneOneThreeThreeAtSeven) {
  const RingSpec r = RingSpec::root_of_unity(7);
  const RingMatrix f = fusion_matrix(1, 1, 3, 3, r);
  ASSERT_EQ(f.rows(), 2u);
  EXPECT_FALSE(f.determinant().is_zero());
  // Numeric determinant as an independent check.
  const auto d = oracle::eval(f(0, 0)) * oracle::eval(f(1, 1)) - oracle::eval(f(0, 1)) * oracle::eval(f(1, 0));
  EXPECT_GT(std::abs(d), 1e-6);
  EXPECT_TRUE(oracle::close(oracle::eval(f.determinant()), d));
  for (size_t i = 0; i < 2; ++i)
    for (size_t k = 0; k < 2; ++k) EXPECT_FALSE(f(i, k).is_zero());
}

TEST(FusionMatrix, AllOnesGenericHasNoZeroEntries) {
  const RingMatrix f = fusion_matrix(1, 1, 1, 1, G);
  ASSERT_EQ(f.rows(), 2u);
  for (size_t i = 0; i < 2; ++i)
    for (size_t k = 0; k < 2; ++k) EXPECT_FALSE(f(i, k).is_zero());
}

TEST(FusionMatrix, ZeroDimensionalIsAnError) {
  EXPECT_THROW(fusion_matrix(0, 1, 1, 3, G), std::invalid_argument);
  EXPECT_THROW(fusion_matrix(1, 1, 1, 0, G), std::invalid_argument);
}

TEST(FusionMatrix, LabelsAndOrdering) {
  const RingMatrix f = fusion_matrix(2, 2, 2, 2, G);
  EXPECT_EQ(f.col_labels, (std::vector<std::string>{"v0", "v2", "v4"}));
  EXPECT_EQ(f.row_labels, (std::vector<std::string>{"w0", "w2", "w4"}));
  EXPECT_EQ(v_basis_colors(2, 2, 2, 2, RingSpec::root_of_unity(5)), (std::vector<int>{0, 2}));
}

TEST(FusionMatrix, ReverseExpansionIsTheInverse) {
  for (const RingSpec& r : {G, RingSpec::root_of_unity(5), RingSpec::root_of_unity(7)})
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (int c = 0; c <= 3; ++c)
          for (int d = 0; d <= 3; ++d) {
            if (v_basis_colors(a, b, c, d, r).empty()) continue;
            const RingMatrix f = fusion_matrix(a, b, c, d, r);
            const RingMatrix back = fusion_matrix(a, d, c, b, r);
            EXPECT_TRUE((back * f).is_identity()) << r.name() << " " << a << b << c << d;
            EXPECT_TRUE((f * back).is_identity()) << r.name() << " " << a << b << c << d;
          }
}

TEST(FusionMatrix, InverseMatchesGaussJordan) {
  for (const RingSpec& r : {G, RingSpec::root_of_unity(7)}) {
    const RingMatrix inv = fusion_matrix(1, 1, 2, 2, r).inverse();
    const RingMatrix reverse = fusion_matrix(1, 2, 2, 1, r);
    ASSERT_EQ(inv.rows(), reverse.rows());
    for (size_t k = 0; k < inv.rows(); ++k)
      for (size_t l = 0; l < inv.cols(); ++l) EXPECT_EQ(inv(k, l), reverse(k, l));
  }
}
