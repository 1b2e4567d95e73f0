#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tqft/fraction.hpp"
#include "tqft/scalar.hpp"

using namespace tqft;

namespace {

const RingSpec G = RingSpec::generic();

Scalar A(const RingSpec& r, int k = 1) { return Scalar::monomial(r, k); }

}  // namespace

TEST(Scalar, UnitIdentity) {
  for (const RingSpec& r : {G, RingSpec::root_of_unity(5), RingSpec::root_of_unity(7)})
    EXPECT_TRUE((A(r) * A(r, -1)).is_one());
}

TEST(Scalar, DefiningRelationAtLevelFive) {
  const RingSpec r = RingSpec::root_of_unity(5);
  EXPECT_TRUE(A(r, 20).is_one());
  EXPECT_FALSE(A(r, 10).is_one());
  EXPECT_EQ(A(r, 10), -Scalar::one(r));
}

TEST(Scalar, AdditiveInverse) {
  const Scalar x = A(G, 2) + A(G, -2);
  EXPECT_TRUE((x - x).is_zero());
}

TEST(Scalar, RejectsNonPrimeLevels) {
  EXPECT_THROW(RingSpec::root_of_unity(9), std::invalid_argument);
  EXPECT_THROW(RingSpec::root_of_unity(3), std::invalid_argument);
  EXPECT_THROW(RingSpec::root_of_unity(2), std::invalid_argument);
}

TEST(Scalar, InversionErrors) {
  EXPECT_THROW(Scalar::zero(G).inverse(), RingError);
  EXPECT_THROW((A(G, 2) + A(G, -2)).inverse(), RingError);
  const RingSpec r = RingSpec::root_of_unity(7);
  EXPECT_THROW(Scalar::zero(r).inverse(), RingError);
  const Scalar x = A(r, 2) + A(r, -2) + Scalar::constant(r, 3);
  EXPECT_TRUE((x * x.inverse()).is_one());
}

TEST(QuantumInteger, SmallValues) {
  EXPECT_TRUE(quantum_integer(0, G).is_zero());
  EXPECT_EQ(quantum_integer(2, G), A(G, 2) + A(G, -2));
  EXPECT_EQ(quantum_integer(3, G), A(G, 4) + Scalar::one(G) + A(G, -4));
}

TEST(QuantumInteger, VanishesAtTheLevel) {
  for (int p : {5, 7, 11}) {
    const RingSpec r = RingSpec::root_of_unity(p);
    EXPECT_TRUE(quantum_integer(p, r).is_zero()) << p;
    // A^{2p} = -1 makes the numerator vanish independently of the library.
    EXPECT_EQ(A(r, 2 * p), -Scalar::one(r));
    for (int n = 1; n < p; ++n) EXPECT_FALSE(quantum_integer(n, r).is_zero()) << p << " " << n;
  }
}

TEST(QuantumInteger, MatchesNumericFormula) {
  for (const RingSpec& r : {G, RingSpec::root_of_unity(5), RingSpec::root_of_unity(11)}) {
    const auto a = oracle::point(r);
    for (int n = 0; n <= 12; ++n) EXPECT_TRUE(oracle::close(oracle::eval(quantum_integer(n, r)), oracle::qint(n, a))) << n;
  }
  EXPECT_THROW(quantum_integer(-1, G), std::invalid_argument);
}

TEST(QuantumFactorial, SmallValues) {
  EXPECT_TRUE(quantum_factorial(0, G).is_one());
  EXPECT_EQ(quantum_factorial(2, G), A(G, 2) + A(G, -2));
  for (int p : {5, 7, 11}) {
    const RingSpec r = RingSpec::root_of_unity(p);
    for (int n = 0; n < p; ++n) EXPECT_FALSE(quantum_factorial(n, r).is_zero());
    EXPECT_TRUE(quantum_factorial(p, r).is_zero());
  }
}

TEST(LoopValue, SmallValues) {
  EXPECT_TRUE(loop_value(0, G).is_one());
  EXPECT_EQ(loop_value(1, G), -A(G, 2) - A(G, -2));
  EXPECT_EQ(loop_value(2, G), A(G, 4) + Scalar::one(G) + A(G, -4));
  // The 2-colored unknot through the projector oracle.
  EXPECT_EQ(Fraction(loop_value(2, G)), evaluate_network(ColoredNetwork::unknot(2), G));
}

TEST(LeadingDegree, Examples) {
  EXPECT_EQ((A(G, 2) + A(G, -2)).leading_degree(), 2);
  EXPECT_EQ(quantum_integer(3, G).leading_degree(), 4);
  // [2][3] = A^6 + 2A^2 + 2A^-2 + A^-6 expanded by hand.
  const oracle::Laurent expected{{6, 1}, {2, 2}, {-2, 2}, {-6, 1}};
  EXPECT_EQ(quantum_factorial(3, G), oracle::to_scalar(expected, G));
  EXPECT_EQ(quantum_factorial(3, G).leading_degree(), 6);
}

TEST(LeadingDegree, Errors) {
  EXPECT_THROW(Scalar::zero(G).leading_degree(), std::domain_error);
  EXPECT_THROW(A(RingSpec::root_of_unity(5)).leading_degree(), std::domain_error);
}

TEST(ScalarProperty, RingAxiomsOnRandomElements) {
  for (const RingSpec& r : {G, RingSpec::root_of_unity(5), RingSpec::root_of_unity(7)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const Scalar x = oracle::random_scalar(r), y = oracle::random_scalar(r), z = oracle::random_scalar(r);
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * y, y * x);
      EXPECT_TRUE(oracle::close(oracle::eval(x * y), oracle::eval(x) * oracle::eval(y), 1e-8));
    }
  }
}

TEST(ScalarProperty, InverseAtRootsOfUnity) {
  for (int p : {5, 7}) {
    const RingSpec r = RingSpec::root_of_unity(p);
    for (int trial = 0; trial < 40; ++trial) {
      const Scalar x = oracle::random_scalar(r, 5);
      if (x.is_zero()) continue;
      EXPECT_TRUE((x * x.inverse()).is_one());
    }
  }
}

TEST(ScalarProperty, SubstitutionIsARingMap) {
  const RingSpec r = RingSpec::root_of_unity(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Scalar x = oracle::random_scalar(G), y = oracle::random_scalar(G);
    EXPECT_EQ((x * y).substitute(r), x.substitute(r) * y.substitute(r));
    EXPECT_EQ((x + y).substitute(r), x.substitute(r) + y.substitute(r));
  }
}

TEST(Fraction, CyclotomicDenominators) {
  const Fraction inv3 = Fraction(quantum_integer(3, G)).inverse();
  EXPECT_TRUE((inv3 * Fraction(quantum_integer(3, G))) == Fraction::one(G));
  EXPECT_FALSE(inv3.is_scalar());
  const Fraction at7 = inv3.substitute(RingSpec::root_of_unity(7));
  EXPECT_TRUE(at7.is_scalar());
  EXPECT_EQ(at7.to_scalar() * quantum_integer(3, RingSpec::root_of_unity(7)), Scalar::one(RingSpec::root_of_unity(7)));
  // [3] vanishes at p = 3, but p = 3 is not a level; [5] vanishes at p = 5.
  const Fraction inv5 = Fraction(quantum_integer(5, G)).inverse();
  EXPECT_THROW(inv5.substitute(RingSpec::root_of_unity(5)), RingError);
}

TEST(Fraction, FactoredFactorialsAgree) {
  for (const RingSpec& r : {G, RingSpec::root_of_unity(7)})
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(factored_quantum_factorial(n).to_fraction(r), Fraction(quantum_factorial(n, r)));
}
