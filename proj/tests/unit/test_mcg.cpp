#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tqft/mcg_action.hpp"
#include "tqft/recoupling.hpp"

using namespace tqft;

namespace {

const RingSpec G = RingSpec::generic();
const RingSpec P5 = RingSpec::root_of_unity(5);
const RingSpec P7 = RingSpec::root_of_unity(7);

Fraction mu(int c, const RingSpec& r) { return Fraction(Scalar::monomial(r, c * (c + 2), c % 2 ? -1 : 1)); }

}  // namespace

TEST(TwistEigenvalue, Formula) {
  for (const RingSpec& r : {G, P5, P7})
    for (int c = 0; c <= 5; ++c) EXPECT_EQ(Fraction(twist_eigenvalue(c, r)), mu(c, r));
  EXPECT_THROW(twist_eigenvalue(-1, G), std::invalid_argument);
}

TEST(Omega, LevelFive) {
  const OmegaCoefficients w = omega_coefficients(5);
  ASSERT_EQ(w.terms.size(), 4u);
  EXPECT_TRUE(w.terms[0].second.is_one());
  EXPECT_EQ(w.terms[1].second, -quantum_integer(2, P5));
  EXPECT_EQ(w.terms[2].second, quantum_integer(3, P5));
  EXPECT_EQ(w.terms[3].second, -quantum_integer(4, P5));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(w.terms[static_cast<size_t>(i)].first, i);
  EXPECT_THROW(omega_coefficients(G), std::domain_error);
}

TEST(EdgeTwist, ZeroColoredEdgeIsIdentity) {
  const UniTrivalentGraph g = standard_graph(0, 4);
  EXPECT_TRUE(edge_twist_matrix(g, 0, {0, 2, 2, 2}, P7).is_identity());
}

TEST(EdgeTwist, MiddleEdgeOfOneOneThreeThree) {
  const UniTrivalentGraph g = standard_graph(0, 4);
  const RingMatrix m = edge_twist_matrix(g, g.find_edge("x1"), {1, 1, 3, 3}, P7);
  ASSERT_EQ(m.rows(), 2u);
  EXPECT_TRUE(m.is_diagonal());
  EXPECT_EQ(m(0, 0), Fraction::one(P7));
  EXPECT_EQ(m(1, 1), Fraction(Scalar::monomial(P7, 8)));
}

TEST(EdgeTwist, LegTwistIsScalar) {
  const UniTrivalentGraph g = standard_graph(0, 5);
  for (int leg = 0; leg < 5; ++leg) {
    const std::vector<int> colors{1, 1, 2, 1, 1};
    const RingMatrix m = edge_twist_matrix(g, g.leg_edge(leg), colors, G);
    EXPECT_TRUE(m.is_scalar_matrix());
    EXPECT_EQ(m(0, 0), mu(colors[static_cast<size_t>(leg)], G));
  }
}

TEST(EdgeTwist, Errors) {
  const UniTrivalentGraph g = standard_graph(0, 4);
  EXPECT_THROW(edge_twist_matrix(g, 9, {1, 1, 1, 1}, G), std::invalid_argument);
  EXPECT_THROW(edge_twist_matrix(g, -1, {1, 1, 1, 1}, G), std::invalid_argument);
  EXPECT_THROW(edge_twist_matrix(g, 0, {0, 1, 1, 3}, G), std::invalid_argument);
}

TEST(EdgeTwistProperty, InverseUndoesTwist) {
  for (int trial = 0; trial < 30; ++trial) {
    const int b = oracle::uniform(4, 6);
    const UniTrivalentGraph g = standard_graph(0, b);
    std::vector<int> colors;
    for (int k = 0; k < b; ++k) colors.push_back(oracle::uniform(0, 3));
    if (dimension(0, b, colors, P7) == 0) continue;
    const int e = oracle::uniform(0, static_cast<int>(g.edges().size()) - 1);
    EXPECT_TRUE((edge_twist_matrix(g, e, colors, P7) * edge_twist_matrix(g, e, colors, P7, true)).is_identity());
  }
}

TEST(DualTwist, DimensionOne) {
  const RingMatrix m = dual_twist_matrix(1, 1, 3, 3, P5);
  ASSERT_EQ(m.rows(), 1u);
  // w-basis color for (a,d,.) and (b,c,.) is 2 at p = 5.
  EXPECT_EQ(w_basis_colors(1, 1, 3, 3, P5), (std::vector<int>{2}));
  EXPECT_EQ(m(0, 0), mu(2, P5));
}

TEST(DualTwist, EigenvaluesAreTheWTwists) {
  const RingMatrix m = dual_twist_matrix(1, 1, 3, 3, P7);
  ASSERT_EQ(m.rows(), 2u);
  const std::vector<int> ws = w_basis_colors(1, 1, 3, 3, P7);
  ASSERT_EQ(ws.size(), 2u);
  // Cayley-Hamilton with the predicted eigenvalues: (M - mu_w0)(M - mu_w1) = 0.
  RingMatrix f0 = m, f1 = m;
  for (size_t k = 0; k < 2; ++k) {
    f0(k, k) -= mu(ws[0], P7);
    f1(k, k) -= mu(ws[1], P7);
  }
  const RingMatrix prod = f0 * f1;
  for (size_t r = 0; r < 2; ++r)
    for (size_t k = 0; k < 2; ++k) EXPECT_TRUE(prod(r, k).is_zero());
  EXPECT_EQ(m(0, 0) + m(1, 1), mu(ws[0], P7) + mu(ws[1], P7));
  EXPECT_FALSE(m.is_diagonal());
}

TEST(DualTwist, InverseFlag) {
  const RingMatrix m = dual_twist_matrix(1, 1, 1, 1, G);
  EXPECT_TRUE((m * dual_twist_matrix(1, 1, 1, 1, G, true)).is_identity());
}

TEST(PureBraid, AdjacentPairUsesTheFirstInternalEdge) {
  const std::vector<int> colors{1, 1, 1, 1, 2};
  const UniTrivalentGraph g = standard_graph(0, 5);
  EXPECT_EQ(pure_braid_twist(5, 1, 2, colors, G), edge_twist_matrix(g, g.find_edge("x1"), colors, G));
  EXPECT_EQ(pure_braid_move_count(5, 1, 2), 0);
}

TEST(PureBraid, DisjointCurvesCommuteProjectively) {
  const std::vector<int> colors{1, 1, 1, 1, 2};
  for (const RingSpec& r : {G, P7}) {
    const RingMatrix t12 = pure_braid_twist(5, 1, 2, colors, r);
    const RingMatrix t34 = pure_braid_twist(5, 3, 4, colors, r);
    const RingMatrix comm =
        t12 * t34 * pure_braid_twist(5, 1, 2, colors, r, true) * pure_braid_twist(5, 3, 4, colors, r, true);
    EXPECT_TRUE(comm.is_scalar_matrix());
  }
}

TEST(PureBraid, BraidRelationAcrossNeighbours) {
  // Twists about overlapping curves do not commute.
  const std::vector<int> colors{1, 1, 1, 1, 2};
  const RingMatrix t12 = pure_braid_twist(5, 1, 2, colors, G);
  const RingMatrix t23 = pure_braid_twist(5, 2, 3, colors, G);
  EXPECT_FALSE(t12 * t23 == t23 * t12);
}

TEST(PureBraid, Errors) {
  const std::vector<int> colors{1, 1, 1, 1, 2};
  EXPECT_THROW(pure_braid_twist(5, 1, 3, colors, G), std::invalid_argument);
  EXPECT_THROW(pure_braid_twist(5, 2, 1, colors, G), std::invalid_argument);
  EXPECT_THROW(pure_braid_twist(2, 1, 2, {1, 1}, G), std::invalid_argument);
}
