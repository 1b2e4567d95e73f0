#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "tqft/admissible.hpp"
#include "tqft/coloring.hpp"
#include "tqft/density.hpp"
#include "tqft/mcg_action.hpp"
#include "tqft/recoupling.hpp"

using namespace tqft;

namespace {

const RingSpec G = RingSpec::generic();

const Check* find_check(const Certificate& c, const std::string& name) {
  for (const auto& k : c.checks)
    if (k.name == name) return &k;
  return nullptr;
}

/// Colors i for which the summand V_{0,3;a,c_1,i} (x) V_{0,n;i,c_2..c_n} is nonzero.
std::vector<int> nonzero_summands(int a, const std::vector<int>& c) {
  std::vector<int> out;
  std::vector<int> rest(c.begin() + 1, c.end());
  for (int i = 0; i <= a + c[0]; ++i) {
    if (!is_admissible_triple(a, c[0], i, G)) continue;
    std::vector<int> cols{i};
    cols.insert(cols.end(), rest.begin(), rest.end());
    if (dimension(0, static_cast<int>(cols.size()), cols, G) > 0) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST(TetNonzero, Examples) {
  const TetDegreeReport r = tet_nonzero_generic(1, 1, 2, 1, 1, 2);
  EXPECT_TRUE(r.nonzero);
  EXPECT_EQ(r.value, tet(1, 1, 2, 1, 1, 2, G));
  const TetDegreeReport big = tet_nonzero_generic(2, 2, 2, 2, 2, 2);
  EXPECT_TRUE(big.nonzero);
  EXPECT_GE(big.summand_degrees.size(), 2u);
  EXPECT_TRUE(big.unique_maximum);
  EXPECT_THROW(tet_nonzero_generic(1, 1, 2, 1, 1, 1), std::invalid_argument);
}

TEST(TetNonzero, SingleSummandFrames) {
  int single = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= a; ++b) {
      const int i = a - b;
      for (int c = 0; c <= 4; ++c)
        for (int d = 0; d <= 4; ++d)
          for (int j = 0; j <= 8; ++j) {
            if (!is_admissible_triple(a, b, i, G) || !is_admissible_triple(c, d, i, G) ||
                !is_admissible_triple(a, d, j, G) || !is_admissible_triple(b, c, j, G))
              continue;
            const TetDegreeReport r = tet_nonzero_generic(a, b, i, c, d, j);
            EXPECT_TRUE(r.nonzero);
            if (r.summand_degrees.size() == 1) {
              EXPECT_TRUE(r.unique_maximum);
              ++single;
            }
          }
    }
  EXPECT_GT(single, 0);
}

TEST(TetNonzeroProperty, EveryFrameUpToSixIsNonzero) {
  int frames = 0;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int i = 0; i <= 6; ++i) {
        if (!is_admissible_triple(a, b, i, G)) continue;
        for (int c = 0; c <= 6; ++c)
          for (int d = 0; d <= 6; ++d) {
            if (!is_admissible_triple(c, d, i, G)) continue;
            for (int j = 0; j <= 6; ++j) {
              if (!is_admissible_triple(a, d, j, G) || !is_admissible_triple(b, c, j, G)) continue;
              const TetDegreeReport r = tet_nonzero_generic(a, b, i, c, d, j);
              EXPECT_TRUE(r.nonzero);
              EXPECT_GT(std::abs(oracle::eval(r.value)), 0.0);
              ++frames;
            }
          }
      }
  EXPECT_GT(frames, 1000);
}

TEST(InfiniteOrder, StatedRatio) {
  EXPECT_EQ(infinite_order_ratio(0), -Scalar::monomial(G, 8));
  EXPECT_EQ(infinite_order_ratio(1), -Scalar::monomial(G, 12));
  for (int i = 0; i <= 20; ++i) {
    int k = 0;
    Rational c;
    ASSERT_TRUE(infinite_order_ratio(i).as_monomial(k, c));
    EXPECT_NE(k, 0);
  }
}

TEST(InfiniteOrder, TwistRatioIsAMonomialOfNonzeroDegree) {
  for (int i = 0; i <= 10; ++i) {
    const Scalar r = twist_ratio(i);
    EXPECT_EQ(r * twist_eigenvalue(i, G), twist_eigenvalue(i + 2, G));
    int k = 0;
    Rational c;
    ASSERT_TRUE(r.as_monomial(k, c));
    EXPECT_EQ(k, 4 * i + 8);
  }
}

TEST(WeightAnalysis, Examples) {
  const WeightAnalysis odd = weight_scalar_analysis({{1, 9, 25}});
  EXPECT_EQ(odd.verdict, WeightVerdict::SlFull);
  EXPECT_EQ(odd.rank, 3);
  EXPECT_TRUE(odd.non_repetitive);
  EXPECT_TRUE(odd.minimal_gap);
  const WeightAnalysis two = weight_scalar_analysis({{0, 4}});
  EXPECT_EQ(two.verdict, WeightVerdict::SlFull);
  EXPECT_EQ(two.rank, 2);
  const WeightAnalysis rep = weight_scalar_analysis({{0, 4, 8}});
  EXPECT_EQ(rep.verdict, WeightVerdict::Inconclusive);
  EXPECT_FALSE(rep.non_repetitive);
  EXPECT_FALSE(rep.repetition_witness.empty());
  EXPECT_THROW(weight_scalar_analysis({{5}}), std::invalid_argument);
  EXPECT_EQ(to_string(WeightVerdict::SlFull), "SL_FULL");
}

TEST(WeightAnalysisProperty, SquaresOfAStepTwoRunAreNonRepetitive) {
  for (int start = 0; start <= 8; ++start)
    for (int len = 2; len <= 7; ++len) {
      WeightScalarSet w;
      for (int k = 0; k < len; ++k) w.exponents.push_back(static_cast<long long>(start + 2 * k) * (start + 2 * k));
      const WeightAnalysis r = weight_scalar_analysis(w);
      EXPECT_TRUE(r.non_repetitive) << start << " " << len;
      EXPECT_EQ(r.verdict, WeightVerdict::SlFull);
    }
}

TEST(EigenvalueSet, Examples) {
  EXPECT_EQ(eigenvalue_set(0, {3, 2, 3}).colors, (std::vector<int>{3}));
  EXPECT_EQ(eigenvalue_set(1, {1, 1, 1}).colors, (std::vector<int>{0, 2}));
  // V_{0,4;2,1,1,1} has odd total parity, so there is no summand at all.
  EXPECT_TRUE(eigenvalue_set(2, {1, 1, 1}).colors.empty());
  EXPECT_EQ(eigenvalue_set(2, {1, 1, 2}).colors, (std::vector<int>{1, 3}));
  const EigenvalueSet e = eigenvalue_set(1, {1, 1, 1});
  EXPECT_EQ(e.exponents, (std::vector<long long>{0, 4}));
  EXPECT_EQ(e.twist_exponents, (std::vector<long long>{0, 8}));
  EXPECT_TRUE(eigenvalue_set(1, {1, 1}).colors.empty());
}

TEST(EigenvalueSetProperty, CardinalityCountsNonzeroSummands) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> c(static_cast<size_t>(n), 0);
    std::function<void(size_t, int)> rec = [&](size_t k, int lo) {
      if (k == c.size()) {
        for (int a = 0; a <= 3; ++a) EXPECT_EQ(eigenvalue_set(a, c).colors, nonzero_summands(a, c));
        return;
      }
      for (int x = lo; x <= 3; ++x) {
        c[k] = x;
        rec(k + 1, x);
      }
    };
    rec(0, 0);
  }
}

TEST(Noniso, Examples) {
  const NonisoResult odd = noniso_check({1, 1, 1}, {0, 2});
  EXPECT_TRUE(odd.pairs.empty());
  EXPECT_EQ(odd.skipped, (std::vector<int>{0, 2}));
  const NonisoResult r = noniso_check({1, 1, 2}, {0, 2});
  EXPECT_TRUE(r.separated);
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(r.pairs[0].reason, "cardinality");
  const NonisoResult s = noniso_check({2, 2, 2}, {0, 2, 4});
  EXPECT_TRUE(s.separated);
  EXPECT_EQ(s.pairs.size(), 3u);
  const NonisoResult self = noniso_check({2, 2, 2}, {2, 2});
  EXPECT_TRUE(self.pairs.empty());
  EXPECT_THROW(noniso_check({1, 1}, {0, 2}), std::invalid_argument);
  EXPECT_THROW(noniso_check({2, 1, 1}), std::invalid_argument);
}

TEST(Noniso, DefaultRangeUpToTwiceTheFirstColor) {
  const NonisoResult r = noniso_check({1, 2, 3});
  for (const auto& p : r.pairs) {
    EXPECT_LE(p.a, 2);
    EXPECT_LE(p.a2, 2);
  }
  EXPECT_TRUE(r.separated);
}

TEST(Noniso, IdenticalSpectraAreNotSeparated) {
  const NonisoResult r = noniso_compare({{0, {0, 8, 24}}, {2, {0, 8, 24}}});
  EXPECT_FALSE(r.separated);
  // A reflected spectrum has the inverted ratio set: dual, so not separated either.
  const NonisoResult d = noniso_compare({{0, {0, 8, 24}}, {2, {0, 16, 24}}});
  EXPECT_FALSE(d.separated);
}

TEST(NonisoProperty, ShiftInvariance) {
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<int, std::vector<long long>>> sets;
    const int m = oracle::uniform(2, 4);
    for (int k = 0; k < m; ++k) {
      std::vector<long long> e;
      const int len = oracle::uniform(1, 4);
      for (int t = 0; t < len; ++t) e.push_back(oracle::uniform(0, 12) * 2);
      std::sort(e.begin(), e.end());
      sets.emplace_back(k, e);
    }
    const NonisoResult base = noniso_compare(sets);
    for (auto& [a, e] : sets) {
      const long long shift = oracle::uniform(-20, 20);
      for (auto& x : e) x += shift;
    }
    const NonisoResult shifted = noniso_compare(sets);
    EXPECT_EQ(base.separated, shifted.separated);
    ASSERT_EQ(base.pairs.size(), shifted.pairs.size());
    for (size_t k = 0; k < base.pairs.size(); ++k) EXPECT_EQ(base.pairs[k].reason, shifted.pairs[k].reason);
  }
}

TEST(DimensionConditions, Examples) {
  EXPECT_TRUE(dimension_conditions({1, 3, 4}).ok);
  const auto bad = dimension_conditions({1, 1, 5});
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.ones, (std::vector<int>{0, 1}));
  EXPECT_FALSE(dimension_conditions({2, 2}).ok);
  EXPECT_TRUE(dimension_conditions({}).ok);
}

TEST(DimensionConditions, RestrictionOfOneOneOneOneTwo) {
  // V_{0,5;1,1,1,1,2} restricted along the curve around legs 1, 2.
  const std::vector<int> c{1, 1, 1, 1, 2};
  std::vector<long long> dims;
  long long total = 0;
  for (int i : eigenvalue_set(c[0], {c[1], c[2], c[3], c[4]}).colors) {
    dims.push_back(dimension(0, 4, {i, c[2], c[3], c[4]}, G));
    total += dims.back();
  }
  EXPECT_EQ(total, dimension(0, 5, c, G));
  EXPECT_EQ(dims, (std::vector<long long>{1, 2}));
  EXPECT_TRUE(dimension_conditions(dims).ok);
}

TEST(CertifyDense, FourPunctures) {
  const Certificate c = certify_dense(4, {1, 1, 1, 1});
  EXPECT_EQ(c.status, CertStatus::Certified);
  EXPECT_EQ(c.substatus, "SL_FULL(2)");
  EXPECT_NE(find_check(c, "tet_nonvanishing"), nullptr);
  EXPECT_NE(find_check(c, "infinite_order"), nullptr);
  EXPECT_NE(find_check(c, "weight_analysis"), nullptr);
}

TEST(CertifyDense, FivePunctures) {
  const Certificate c = certify_dense(5, {1, 1, 1, 1, 2});
  EXPECT_EQ(c.status, CertStatus::Certified);
  EXPECT_NE(find_check(c, "noniso"), nullptr);
  EXPECT_NE(find_check(c, "dimension_conditions"), nullptr);
  EXPECT_FALSE(c.children.empty());
}

TEST(CertifyDense, Degenerate) {
  EXPECT_EQ(certify_dense(4, {1, 1, 1, 3}).status, CertStatus::Vacuous);
  EXPECT_EQ(certify_dense(3, {1, 1, 2}).status, CertStatus::NotApplicable);
  EXPECT_EQ(certify_dense(4, {0, 1, 1, 3}).status, CertStatus::Vacuous);
  EXPECT_THROW(certify_dense(4, {1, 1, 1}), std::invalid_argument);
}
