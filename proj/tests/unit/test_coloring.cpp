#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "tqft/admissible.hpp"
#include "tqft/coloring.hpp"

using namespace tqft;

namespace {

const RingSpec G = RingSpec::generic();
const RingSpec P5 = RingSpec::root_of_unity(5);
const RingSpec P7 = RingSpec::root_of_unity(7);

int internal_vertices(const UniTrivalentGraph& g) {
  return static_cast<int>(std::count(g.vertices().begin(), g.vertices().end(), UniTrivalentGraph::VertexKind::Internal));
}

}  // namespace

TEST(Admissible, Examples) {
  EXPECT_TRUE(is_admissible_triple(1, 1, 2, P5));
  const auto big = check_admissible_triple(3, 3, 2, P5);
  EXPECT_FALSE(big.admissible);
  EXPECT_EQ(big.reason, AdmissibilityReason::LevelSum);
  for (const RingSpec& r : {G, P5, P7}) {
    const auto odd = check_admissible_triple(1, 1, 1, r);
    EXPECT_FALSE(odd.admissible);
    EXPECT_EQ(odd.reason, AdmissibilityReason::Parity);
  }
  EXPECT_EQ(check_admissible_triple(0, 1, 3, G).reason, AdmissibilityReason::Triangle);
  EXPECT_EQ(check_admissible_triple(4, 0, 4, P5).reason, AdmissibilityReason::ColorAboveLevel);
  EXPECT_EQ(check_admissible_triple(-1, 1, 0, G).reason, AdmissibilityReason::NegativeColor);
}

TEST(AdmissibleProperty, SymmetricAndMatchesDefinition) {
  for (const RingSpec& r : {G, P5, P7})
    for (int i = 0; i <= 8; ++i)
      for (int j = 0; j <= 8; ++j)
        for (int k = 0; k <= 8; ++k) {
          const bool a = is_admissible_triple(i, j, k, r);
          EXPECT_EQ(a, is_admissible_triple(j, k, i, r));
          EXPECT_EQ(a, is_admissible_triple(j, i, k, r));
          bool expected = (i + j + k) % 2 == 0 && i <= j + k && j <= i + k && k <= i + j;
          if (r.is_root_of_unity())
            expected = expected && i + j + k <= 2 * r.p() - 4 && std::max({i, j, k}) <= r.p() - 2;
          EXPECT_EQ(a, expected) << i << j << k;
        }
}

TEST(StandardGraph, FourHoledSphereIsH) {
  const UniTrivalentGraph g = standard_graph(0, 4);
  EXPECT_EQ(g.edges().size(), 5u);
  EXPECT_EQ(internal_vertices(g), 2);
  EXPECT_EQ(g.genus(), 0);
  EXPECT_EQ(g.find_edge("x1"), 2);
  // Legs 1,2 meet at one vertex and legs 3,4 at the other.
  EXPECT_EQ(g.edges()[0].v, g.edges()[1].v);
  EXPECT_EQ(g.edges()[3].v, g.edges()[4].v);
  EXPECT_NE(g.edges()[0].v, g.edges()[3].v);
}

TEST(StandardGraph, OneHoledTorusIsLollipop) {
  const UniTrivalentGraph g = standard_graph(1, 1);
  EXPECT_EQ(g.genus(), 1);
  EXPECT_EQ(g.boundary_count(), 1);
  EXPECT_EQ(internal_vertices(g), 1);
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[1].u, g.edges()[1].v);
}

TEST(StandardGraph, PantsIsOneVertex) {
  const UniTrivalentGraph g = standard_graph(0, 3);
  EXPECT_EQ(internal_vertices(g), 1);
  EXPECT_EQ(g.edges().size(), 3u);
}

TEST(StandardGraph, DegenerateCases) {
  EXPECT_THROW(standard_graph(0, 0), std::invalid_argument);
  EXPECT_THROW(standard_graph(0, 1), std::invalid_argument);
  EXPECT_THROW(standard_graph(1, 0), std::invalid_argument);
  for (int g = 0; g <= 3; ++g)
    for (int b = 0; b <= 5; ++b) {
      if ((g == 0 && b < 2) || (g == 1 && b == 0)) continue;
      const UniTrivalentGraph sg = standard_graph(g, b);
      EXPECT_EQ(sg.genus(), g);
      EXPECT_EQ(sg.boundary_count(), b);
      const UniTrivalentGraph back = graph_from_json(to_json(sg));
      EXPECT_EQ(to_json(back), to_json(sg));
    }
}

TEST(Colorings, OneOneThreeThree) {
  const UniTrivalentGraph g = standard_graph(0, 4);
  const auto at7 = enumerate_colorings(g, {1, 1, 3, 3}, P7);
  ASSERT_EQ(at7.size(), 2u);
  EXPECT_EQ(at7[0][2], 0);
  EXPECT_EQ(at7[1][2], 2);
  const auto at5 = enumerate_colorings(g, {1, 1, 3, 3}, P5);
  ASSERT_EQ(at5.size(), 1u);
  EXPECT_EQ(at5[0][2], 0);
}

TEST(Colorings, PantsHasAtMostOne) {
  const UniTrivalentGraph g = standard_graph(0, 3);
  for (const RingSpec& r : {G, P5})
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        for (int c = 0; c <= 4; ++c)
          EXPECT_EQ(enumerate_colorings(g, {a, b, c}, r).size(), is_admissible_triple(a, b, c, r) ? 1u : 0u);
}

TEST(Colorings, Errors) {
  EXPECT_THROW(enumerate_colorings(standard_graph(1, 1), {2}, G), std::domain_error);
  EXPECT_THROW(enumerate_colorings(standard_graph(0, 4), {1, 1, 1}, G), std::invalid_argument);
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(0, 4, {1, 1, 3, 3}, P7), 2);
  EXPECT_EQ(dimension(0, 4, {1, 1, 3, 3}, P5), 1);
  EXPECT_EQ(dimension(0, 5, {9, 1, 2, 1, 1}, G), 0);
  EXPECT_EQ(dimension(0, 4, {1, 1, 1, 1}, G), 2);
  EXPECT_THROW(dimension(1, 1, {2}, G), std::domain_error);
}

TEST(Dimension, OneHoledTorusCountsLollipops) {
  // Loop color j needs (j, j, 2a) admissible: a <= j <= p - 2 - a.
  for (int p : {5, 7, 11}) {
    const RingSpec r = RingSpec::root_of_unity(p);
    for (int a = 0; 2 * a <= p - 2; ++a) {
      EXPECT_EQ(dimension(1, 1, {2 * a}, r), p - 1 - 2 * a) << p << " " << a;
      EXPECT_EQ(dimension(1, 1, {2 * a}, r), oracle::verlinde(p, 1, {2 * a}));
    }
  }
}

TEST(Dimension, MatchesVerlindeFormula) {
  for (int p : {5, 7}) {
    const RingSpec r = RingSpec::root_of_unity(p);
    for (int g = 0; g <= 3; ++g)
      for (int b = 0; b <= 4; ++b) {
        std::vector<int> colors(static_cast<size_t>(b), 0);
        std::function<void(size_t)> rec = [&](size_t k) {
          if (k == colors.size()) {
            EXPECT_EQ(dimension(g, b, colors, r), oracle::verlinde(p, g, colors)) << p << " " << g << " " << b;
            return;
          }
          for (int c = 0; c <= std::min(3, p - 2); ++c) {
            colors[k] = c;
            rec(k + 1);
          }
        };
        rec(0);
      }
  }
}

TEST(Dimension, TransferMatrixMatchesEnumeration) {
  for (const RingSpec& r : {P5, P7})
    for (int g = 0; g <= 2; ++g)
      for (int b = 0; b <= 3; ++b) {
        if ((g == 0 && b < 2) || (g == 1 && b == 0)) continue;
        std::vector<int> colors(static_cast<size_t>(b), 0);
        std::function<void(size_t)> rec = [&](size_t k) {
          if (k == colors.size()) {
            EXPECT_EQ(dimension(g, b, colors, r), dimension_bruteforce(g, b, colors, r));
            return;
          }
          for (int c = 0; c <= 3; ++c) {
            colors[k] = c;
            rec(k + 1);
          }
        };
        rec(0);
      }
}

TEST(Dimension, GenericGenusZeroCountsTrees) {
  for (int trial = 0; trial < 60; ++trial) {
    const int b = oracle::uniform(3, 6);
    std::vector<int> colors;
    for (int k = 0; k < b; ++k) colors.push_back(oracle::uniform(0, 4));
    EXPECT_EQ(dimension(0, b, colors, G), static_cast<long long>(enumerate_colorings(standard_graph(0, b), colors, G).size()));
    // At a large enough level nothing is cut off.
    EXPECT_EQ(dimension(0, b, colors, G), dimension(0, b, colors, RingSpec::root_of_unity(31)));
  }
}
