#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tqft/recoupling.hpp"
#include "tqft/tl_oracle.hpp"

using namespace tqft;

namespace {

const RingSpec G = RingSpec::generic();

Fraction delta(const RingSpec& r) { return Fraction(-Scalar::monomial(r, 2) - Scalar::monomial(r, -2)); }

PlanarDiagram closed(std::vector<DiagramOp> ops) { return {0, std::move(ops)}; }

PlanarDiagram unknot() { return closed({DiagramOp::cup(0), DiagramOp::cap(0)}); }

PlanarDiagram hopf(bool positive) {
  return closed({DiagramOp::cup(0), DiagramOp::cup(2), DiagramOp::cross(1, positive), DiagramOp::cross(1, positive),
                 DiagramOp::cap(0), DiagramOp::cap(0)});
}

/// Random closed diagram on at most `width` strands with `crossings` crossings.
PlanarDiagram random_diagram(int width, int crossings) {
  PlanarDiagram d;
  int strands = 0, placed = 0;
  while (placed < crossings || strands > 0) {
    const int choice = oracle::uniform(0, 2);
    if ((choice == 0 || strands < 2) && strands + 2 <= width && placed < crossings) {
      d.ops.push_back(DiagramOp::cup(oracle::uniform(0, strands)));
      strands += 2;
    } else if (choice == 1 && strands >= 2 && placed < crossings) {
      d.ops.push_back(DiagramOp::cross(oracle::uniform(0, strands - 2), oracle::uniform(0, 1) == 1));
      ++placed;
    } else if (strands >= 2) {
      d.ops.push_back(DiagramOp::cap(oracle::uniform(0, strands - 2)));
      strands -= 2;
    } else {
      d.ops.push_back(DiagramOp::cup(0));
      strands += 2;
    }
  }
  return d;
}

}  // namespace

TEST(Bracket, Unknot) { EXPECT_EQ(resolve_bracket(unknot(), G), delta(G)); }

TEST(Bracket, DisjointUnknotsMultiply) {
  const PlanarDiagram two = closed({DiagramOp::cup(0), DiagramOp::cap(0), DiagramOp::cup(0), DiagramOp::cap(0)});
  EXPECT_EQ(resolve_bracket(two, G), delta(G) * delta(G));
  const PlanarDiagram nested = closed({DiagramOp::cup(0), DiagramOp::cup(1), DiagramOp::cap(1), DiagramOp::cap(0)});
  EXPECT_EQ(resolve_bracket(nested, G), delta(G) * delta(G));
}

TEST(Bracket, HopfLinkAgainstStateSum) {
  for (bool positive : {true, false}) {
    const PlanarDiagram h = hopf(positive);
    const Fraction value = resolve_bracket(h, G);
    EXPECT_EQ(value, Fraction(oracle::to_scalar(oracle::state_sum(h), G)));
    // delta (-A^4 - A^-4), symmetric under mirroring.
    EXPECT_EQ(value, delta(G) * Fraction(-Scalar::monomial(G, 4) - Scalar::monomial(G, -4)));
  }
}

TEST(Bracket, OpenDiagramIsAnError) {
  PlanarDiagram d{2, {DiagramOp::cap(0)}};
  EXPECT_THROW(resolve_bracket(d, G), std::invalid_argument);
}

TEST(Bracket, ReidemeisterTwo) {
  const PlanarDiagram twisted = closed({DiagramOp::cup(0), DiagramOp::cup(2), DiagramOp::cross(1, true),
                                        DiagramOp::cross(1, false), DiagramOp::cap(0), DiagramOp::cap(0)});
  const PlanarDiagram plain =
      closed({DiagramOp::cup(0), DiagramOp::cup(2), DiagramOp::cap(0), DiagramOp::cap(0)});
  EXPECT_EQ(resolve_bracket(twisted, G), resolve_bracket(plain, G));
}

TEST(Bracket, ReidemeisterThree) {
  // sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2 inside a closure on three strands.
  auto closure = [](std::vector<DiagramOp> braid) {
    std::vector<DiagramOp> ops{DiagramOp::cup(0), DiagramOp::cup(0), DiagramOp::cup(0)};
    // Strands 2,3,4 are the three braid strands; 0,1 and 5 close them up.
    for (auto op : braid) {
      op.pos += 2;
      ops.push_back(op);
    }
    ops.push_back(DiagramOp::cap(2));
    ops.push_back(DiagramOp::cap(1));
    ops.push_back(DiagramOp::cap(0));
    return PlanarDiagram{0, ops};
  };
  const auto lhs = closure({DiagramOp::cross(0, true), DiagramOp::cross(1, true), DiagramOp::cross(0, true)});
  const auto rhs = closure({DiagramOp::cross(1, true), DiagramOp::cross(0, true), DiagramOp::cross(1, true)});
  EXPECT_EQ(resolve_bracket(lhs, G), resolve_bracket(rhs, G));
  EXPECT_EQ(resolve_bracket(lhs, G), Fraction(oracle::to_scalar(oracle::state_sum(lhs), G)));
}

TEST(Bracket, ReidemeisterOneKink) {
  // A kink on an unknot multiplies the bracket by -A^{+-3}.
  const PlanarDiagram kinked = closed({DiagramOp::cup(0), DiagramOp::cup(1), DiagramOp::cross(0, true),
                                       DiagramOp::cap(1), DiagramOp::cap(0)});
  const Fraction ratio = resolve_bracket(kinked, G) * resolve_bracket(unknot(), G).inverse();
  EXPECT_TRUE(ratio == Fraction(-Scalar::monomial(G, 3)) || ratio == Fraction(-Scalar::monomial(G, -3)));
  EXPECT_EQ(resolve_bracket(kinked, G), Fraction(oracle::to_scalar(oracle::state_sum(kinked), G)));
}

TEST(BracketProperty, RandomDiagramsMatchStateSum) {
  for (int trial = 0; trial < 80; ++trial) {
    const PlanarDiagram d = random_diagram(6, oracle::uniform(0, 7));
    const Scalar expected = oracle::to_scalar(oracle::state_sum(d), G);
    EXPECT_EQ(resolve_bracket(d, G), Fraction(expected)) << to_json(d).dump();
    const RingSpec r = RingSpec::root_of_unity(5);
    EXPECT_EQ(resolve_bracket(d, r), Fraction(expected.substitute(r)));
  }
}

TEST(BracketProperty, JsonRoundTrip) {
  for (int trial = 0; trial < 20; ++trial) {
    const PlanarDiagram d = random_diagram(6, 4);
    const PlanarDiagram back = planar_diagram_from_json(to_json(d));
    EXPECT_EQ(back.boundary, d.boundary);
    EXPECT_EQ(back.ops, d.ops);
  }
}

TEST(JonesWenzl, OneStrandIsIdentity) { EXPECT_EQ(jones_wenzl(1, G), TLElement::identity(G, 1)); }

TEST(JonesWenzl, TwoStrands) {
  const TLElement& f2 = jones_wenzl(2, G);
  EXPECT_EQ(f2 * f2, f2);
  // f_2 = 1 - e_1 / delta.
  TLElement expected = TLElement::identity(G, 2);
  TLElement e = TLElement::generator(G, 2, 0);
  e *= -delta(G).inverse();
  expected += e;
  EXPECT_EQ(f2, expected);
}

TEST(JonesWenzl, KilledByGenerators) {
  for (int n = 2; n <= 5; ++n) {
    const TLElement& f = jones_wenzl(n, G);
    for (int k = 0; k + 1 < n; ++k) {
      EXPECT_TRUE((f * TLElement::generator(G, n, k)).is_zero()) << n << " " << k;
      EXPECT_TRUE((TLElement::generator(G, n, k) * f).is_zero()) << n << " " << k;
    }
    EXPECT_EQ(f * f, f) << n;
  }
}

TEST(JonesWenzl, AtLevelUpToPMinusTwo) {
  const RingSpec r = RingSpec::root_of_unity(5);
  const TLElement& f3 = jones_wenzl(3, r);
  EXPECT_EQ(f3 * f3, f3);
  for (int k = 0; k < 2; ++k) EXPECT_TRUE((f3 * TLElement::generator(r, 3, k)).is_zero());
}

TEST(Network, ColoredUnknots) {
  EXPECT_EQ(evaluate_network(ColoredNetwork::unknot(1), G), delta(G));
  for (int c = 0; c <= 5; ++c) EXPECT_EQ(evaluate_network(ColoredNetwork::unknot(c), G), Fraction(loop_value(c, G))) << c;
}

TEST(Network, Thetas) {
  EXPECT_EQ(evaluate_network(ColoredNetwork::theta(1, 1, 0), G), delta(G));
  EXPECT_EQ(evaluate_network(ColoredNetwork::theta(1, 1, 2), G), Fraction(quantum_integer(3, G)));
}

TEST(Network, InadmissibleVertex) {
  EXPECT_THROW(evaluate_network(ColoredNetwork::theta(1, 1, 1), G), std::invalid_argument);
  EXPECT_THROW(evaluate_network(ColoredNetwork::theta(1, 1, 4), G), std::invalid_argument);
}

TEST(Network, StrandBoundIsNamed) {
  try {
    evaluate_network(ColoredNetwork::theta(4, 4, 4), G, 8);
    FAIL() << "expected a bound error";
  } catch (const std::length_error& e) {
    EXPECT_NE(std::string(e.what()).find("strand bound"), std::string::npos);
  }
}

TEST(Network, JsonRoundTrip) {
  const ColoredNetwork t = ColoredNetwork::tetrahedron(1, 1, 2, 1, 1, 2);
  EXPECT_EQ(colored_network_from_json(to_json(t)).ops, t.ops);
}
