#include "tqft/density.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tqft/coloring.hpp"
#include "tqft/cyclotomic.hpp"
#include "tqft/irreducibility.hpp"
#include "tqft/mcg_action.hpp"
#include "tqft/recoupling.hpp"
#include "tqft/serialize.hpp"

namespace tqft {

using nlohmann::json;

TetDegreeReport tet_nonzero_generic(int a, int b, int i, int c, int d, int j) {
  const RingSpec ring = RingSpec::generic();
  const TetFrame frame = TetFrame::make(a, b, i, c, d, j, ring);
  TetDegreeReport r;
  r.value = tet(a, b, i, c, d, j, ring);
  r.nonzero = !r.value.is_zero();
  for (int z = frame.z_min; z <= frame.z_max; ++z) {
    const FactoredScalar s = frame.summand(z);
    int deg = s.a_power;
    for (const auto& [dd, e] : s.cyclo) deg += e * 4 * poly::totient(dd);
    r.summand_degrees.push_back(deg);
  }
  if (!r.summand_degrees.empty()) {
    const int top = *std::max_element(r.summand_degrees.begin(), r.summand_degrees.end());
    r.unique_maximum = std::count(r.summand_degrees.begin(), r.summand_degrees.end(), top) == 1;
  }
  return r;
}

Scalar infinite_order_ratio(int i) {
  if (i < 0) throw std::invalid_argument("color must be nonnegative");
  return Scalar::monomial(RingSpec::generic(), 4 * i + 8, -1);
}

Scalar twist_ratio(int i) {
  if (i < 0) throw std::invalid_argument("color must be nonnegative");
  const RingSpec ring = RingSpec::generic();
  return twist_eigenvalue(i + 2, ring) * twist_eigenvalue(i, ring).inverse();
}

std::string to_string(WeightVerdict v) { return v == WeightVerdict::SlFull ? "SL_FULL" : "INCONCLUSIVE"; }

WeightAnalysis weight_scalar_analysis(const WeightScalarSet& w) {
  const auto& x = w.exponents;
  if (x.size() < 2) throw std::invalid_argument("weight analysis needs at least two weights");
  for (size_t k = 1; k < x.size(); ++k)
    if (x[k] <= x[k - 1]) throw std::invalid_argument("weights must be strictly increasing");
  WeightAnalysis r;
  r.rank = static_cast<int>(x.size());
  const long long gap = x[1] - x[0];
  const int n = static_cast<int>(x.size());

  r.non_repetitive = true;
  for (int k = 0; k < n && r.non_repetitive; ++k)
    for (int j = k + 1; j < n; ++j)
      if (!(k == 0 && j == 1) && x[static_cast<size_t>(j)] - x[static_cast<size_t>(k)] == gap) {
        r.non_repetitive = false;
        r.repetition_witness = {0, 1, k, j};
        break;
      }
  std::set<long long> diffs;
  r.all_differences_distinct = true;
  for (int k = 0; k < n; ++k)
    for (int j = k + 1; j < n; ++j)
      if (!diffs.insert(x[static_cast<size_t>(j)] - x[static_cast<size_t>(k)]).second) r.all_differences_distinct = false;

  r.minimal_gap = true;
  for (int t = 2; t < n; ++t)
    if (x[static_cast<size_t>(t)] - x[0] <= gap) r.minimal_gap = false;
  // Sums of the lambda_t - lambda_0 (t >= 2) with positive integer
  // coefficients, up to the gap.
  std::vector<char> reach(static_cast<size_t>(gap + 1), 0);
  reach[0] = 1;
  for (long long v = 1; v <= gap; ++v)
    for (int t = 2; t < n; ++t) {
      const long long part = x[static_cast<size_t>(t)] - x[0];
      if (part <= v && reach[static_cast<size_t>(v - part)]) reach[static_cast<size_t>(v)] = 1;
    }
  r.indecomposable = !reach[static_cast<size_t>(gap)];
  r.verdict = r.non_repetitive && r.indecomposable ? WeightVerdict::SlFull : WeightVerdict::Inconclusive;
  return r;
}

EigenvalueSet eigenvalue_set(int a, const std::vector<int>& c) {
  if (c.size() < 2) throw std::invalid_argument("eigenvalue set needs at least two fixed colors");
  if (a < 0 || std::any_of(c.begin(), c.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("colors must be nonnegative");
  EigenvalueSet e;
  const int total = std::accumulate(c.begin(), c.end(), a);
  if (total % 2 != 0) return e;
  const int n = static_cast<int>(c.size());
  const int inner = std::accumulate(c.begin() + 1, c.end() - 1, 0);  // c_2..c_{n-1}
  const int lo = std::max(c[static_cast<size_t>(n - 1)] - inner, std::abs(a - c[0]));
  const int hi = std::min(a + c[0], inner + c[static_cast<size_t>(n - 1)]);
  int start = std::max(lo, 0);
  if ((start - a - c[0]) % 2 != 0) ++start;
  for (int i = start; i <= hi; i += 2) {
    e.colors.push_back(i);
    e.exponents.push_back(static_cast<long long>(i) * i);
    e.twist_exponents.push_back(static_cast<long long>(i) * (i + 2));
  }
  return e;
}

std::vector<long long> ratio_exponents(const std::vector<long long>& e) {
  std::vector<long long> r;
  for (size_t k = 0; k < e.size(); ++k)
    for (size_t l = 0; l < e.size(); ++l)
      if (k != l) r.push_back(e[k] - e[l]);
  std::sort(r.begin(), r.end());
  return r;
}

NonisoResult noniso_compare(const std::vector<std::pair<int, std::vector<long long>>>& sets) {
  NonisoResult res;
  for (size_t k = 0; k < sets.size(); ++k)
    for (size_t l = k + 1; l < sets.size(); ++l) {
      NonisoResult::Pair pr{sets[k].first, sets[l].first, ""};
      if (sets[k].second.size() != sets[l].second.size()) {
        pr.reason = "cardinality";
      } else {
        const auto r1 = ratio_exponents(sets[k].second);
        const auto r2 = ratio_exponents(sets[l].second);
        std::vector<long long> r2_inverse;
        for (auto it = r2.rbegin(); it != r2.rend(); ++it) r2_inverse.push_back(-*it);
        pr.reason = r1 != r2 && r1 != r2_inverse ? "ratios" : "not_separated";
      }
      if (pr.reason == "not_separated") res.separated = false;
      res.pairs.push_back(std::move(pr));
    }
  return res;
}

NonisoResult noniso_check(const std::vector<int>& c, const std::vector<int>& a_values) {
  if (c.size() < 3) throw std::invalid_argument("non-isomorphism check needs at least three fixed colors");
  if (!std::is_sorted(c.begin(), c.end())) throw std::invalid_argument("fixed colors must be nondecreasing");
  std::vector<std::pair<int, std::vector<long long>>> sets;
  std::vector<int> skipped;
  std::set<int> used;
  for (int a : a_values) {
    if (!used.insert(a).second) continue;
    const EigenvalueSet e = eigenvalue_set(a, c);
    if (e.colors.empty()) {
      skipped.push_back(a);
      continue;
    }
    sets.emplace_back(a, e.twist_exponents);
  }
  NonisoResult r = noniso_compare(sets);
  r.skipped = std::move(skipped);
  return r;
}

NonisoResult noniso_check(const std::vector<int>& c) {
  if (c.empty()) throw std::invalid_argument("non-isomorphism check needs at least three fixed colors");
  std::vector<int> as;
  for (int a = 0; a <= 2 * c[0]; ++a) as.push_back(a);
  return noniso_check(c, as);
}

DimensionConditionResult dimension_conditions(const std::vector<long long>& dims) {
  DimensionConditionResult r;
  for (size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] == 1) r.ones.push_back(static_cast<int>(k));
    if (dims[k] == 2) r.twos.push_back(static_cast<int>(k));
  }
  r.ok = r.ones.size() <= 1 && r.twos.size() <= 1;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

json instance_json(int n, const std::vector<int>& colors) {
  return json{{"ring", to_json(RingSpec::generic())}, {"g", 0}, {"b", n}, {"colors", colors}};
}

json space_json(int b, const std::vector<int>& colors) { return json{{"g", 0}, {"b", b}, {"colors", colors}}; }

class DenseDriver {
 public:
  explicit DenseDriver(int max_color) : max_color_(max_color) {}

  Certificate node(int n, std::vector<int> colors) {
    if (static_cast<int>(colors.size()) != n) throw std::invalid_argument("color count does not match n");
    for (int c : colors) {
      if (c < 0) throw std::invalid_argument("colors must be nonnegative");
      if (c > max_color_)
        throw std::invalid_argument("color " + std::to_string(c) + " exceeds max_color bound " +
                                    std::to_string(max_color_));
    }
    const auto key = colors;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Certificate c = build(n, colors);
    memo_.emplace(key, c);
    return c;
  }

 private:
  Certificate build(int n, std::vector<int> colors) {
    const RingSpec ring = RingSpec::generic();
    Certificate cert;
    cert.claim = n == 4 ? "dense_v04" : "dense";
    cert.instance = instance_json(n, colors);
    if (n < 4) {
      Check k;
      k.name = "precondition";
      k.kind = check_kind::kInfo;
      k.status = CheckStatus::Passed;
      k.witness = json{{"satisfied", false}, {"requirement", "n >= 4"}};
      cert.add_check(std::move(k));
      cert.status = CertStatus::NotApplicable;
      cert.substatus = "needs at least four punctures";
      return cert;
    }
    const long long dim = dimension(0, n, colors, ring);
    {
      Check k;
      k.name = "dimension";
      k.kind = check_kind::kDimension;
      k.status = CheckStatus::Passed;
      k.witness = instance_json(n, colors);
      k.witness["dim"] = dim;
      cert.add_check(std::move(k));
    }
    if (dim < 2) {
      cert.status = CertStatus::Vacuous;
      cert.substatus = "dimension below 2";
      return cert;
    }
    return n == 4 ? base(std::move(cert), colors) : step(std::move(cert), n, colors);
  }

  Certificate base(Certificate cert, const std::vector<int>& col) {
    const RingSpec ring = RingSpec::generic();
    const int a = col[0], b = col[1], c = col[2], d = col[3];
    const auto v = v_basis_colors(a, b, c, d, ring);
    const auto w = w_basis_colors(a, b, c, d, ring);
    {
      Check k;
      k.name = "tet_nonvanishing";
      k.kind = check_kind::kNonzeroValues;
      json values = json::array(), labels = json::array(), degrees = json::array();
      bool ok = true;
      for (int i : v)
        for (int j : w) {
          const TetDegreeReport r = tet_nonzero_generic(a, b, i, c, d, j);
          ok = ok && r.nonzero;
          values.push_back(to_json(r.value));
          labels.push_back("v" + std::to_string(i) + ",w" + std::to_string(j));
          degrees.push_back(json{{"summand_degrees", r.summand_degrees}, {"unique_maximum", r.unique_maximum}});
        }
      k.status = ok ? CheckStatus::Passed : CheckStatus::Failed;
      k.witness = json{{"labels", std::move(labels)}, {"values", std::move(values)}, {"degree_report", std::move(degrees)}};
      k.detail = "exact tetrahedron coefficients are nonzero, so the graph is complete";
      cert.add_check(std::move(k));
    }
    {
      Check k;
      k.name = "infinite_order";
      k.kind = check_kind::kInfiniteOrder;
      const int i = v[0];
      const Scalar actual = twist_ratio(i);
      const Scalar stated = infinite_order_ratio(i);
      int ka = 0, ks = 0;
      Rational ca, cs;
      const bool ok = actual.as_monomial(ka, ca) && stated.as_monomial(ks, cs) && ka != 0 && ks != 0;
      k.status = ok ? CheckStatus::Passed : CheckStatus::Failed;
      k.witness = json{{"i", i}, {"ratio", to_json(actual)}, {"stated", to_json(stated)}, {"exponent", 4 * i + 8}};
      k.detail = "consecutive twist eigenvalues differ by A^{4i+8} up to sign; A is not a root of unity";
      cert.add_check(std::move(k));
    }
    WeightAnalysis wa;
    {
      Check k;
      k.name = "weight_analysis";
      k.kind = check_kind::kWeightAnalysis;
      WeightScalarSet ws;
      for (int i : v) ws.exponents.push_back(static_cast<long long>(i) * (i + 2));
      wa = weight_scalar_analysis(ws);
      k.status = wa.verdict == WeightVerdict::SlFull ? CheckStatus::Passed : CheckStatus::Failed;
      k.witness = json{{"exponents", ws.exponents},
                       {"verdict", to_string(wa.verdict)},
                       {"rank", wa.rank},
                       {"non_repetitive", wa.non_repetitive},
                       {"indecomposable", wa.indecomposable},
                       {"minimal_gap", wa.minimal_gap},
                       {"all_differences_distinct", wa.all_differences_distinct}};
      k.detail = "the smallest weight gap is not repeated and not a positive combination of the others";
      cert.add_check(std::move(k));
    }
    cert.children.push_back(certify_v04(ring, a, b, c, d));
    cert.cited.push_back("indecomposable elements of the shifted weight set of an irreducible representation are "
                         "roots; the Weyl reflections they define generate S_{n+1}, forcing sl_{n+1}");
    cert.finalize();
    if (cert.status == CertStatus::Certified) cert.substatus = "SL_FULL(" + std::to_string(wa.rank) + ")";
    return cert;
  }

  Certificate step(Certificate cert, int n, std::vector<int> s) {
    const RingSpec ring = RingSpec::generic();
    std::sort(s.begin(), s.end());
    cert.instance["sorted_colors"] = s;
    const std::vector<int> fixed(s.begin() + 2, s.end());
    std::vector<int> summand_colors;
    std::vector<long long> dims;
    json parts = json::array();
    for (int i = std::abs(s[1] - s[0]); i <= s[0] + s[1]; i += 2) {
      std::vector<int> sc{i};
      sc.insert(sc.end(), fixed.begin(), fixed.end());
      const long long di = dimension(0, n - 1, sc, ring);
      if (di == 0) continue;
      summand_colors.push_back(i);
      dims.push_back(di);
      parts.push_back(json::array({space_json(3, {s[0], s[1], i}), space_json(n - 1, sc)}));
    }
    {
      Check k;
      k.name = "restriction_dimensions";
      k.kind = check_kind::kDimensionSum;
      const long long total = dimension(0, n, s, ring);
      const long long sum = std::accumulate(dims.begin(), dims.end(), 0LL);
      k.status = sum == total ? CheckStatus::Passed : CheckStatus::Failed;
      k.witness = json{{"ring", to_json(ring)}, {"total", space_json(n, s)}, {"dim", total}, {"parts", std::move(parts)}};
      k.detail = "restriction to the braid group of the last n-1 holes";
      cert.add_check(std::move(k));
    }
    {
      Check k;
      k.name = "dimension_conditions";
      k.kind = check_kind::kDimensionConditions;
      const auto r = dimension_conditions(dims);
      k.status = r.ok ? CheckStatus::Passed : CheckStatus::Failed;
      k.witness = json{{"summand_colors", summand_colors}, {"dims", dims}, {"ones", r.ones}, {"twos", r.twos}};
      k.detail = "at most one summand of dimension 1 and at most one of dimension 2";
      cert.add_check(std::move(k));
    }
    {
      Check k;
      k.name = "noniso";
      k.kind = check_kind::kNoniso;
      json sets = json::array();
      std::vector<std::pair<int, std::vector<long long>>> raw;
      bool hypothesis = true;
      for (int i : summand_colors) {
        const EigenvalueSet e = eigenvalue_set(i, fixed);
        raw.emplace_back(i, e.twist_exponents);
        sets.push_back(json{{"a", i}, {"exponents", e.twist_exponents}, {"colors", e.colors}});
        hypothesis = hypothesis && i <= 2 * fixed[0];
      }
      const NonisoResult r = noniso_compare(raw);
      json pairs = json::array();
      for (const auto& pr : r.pairs) pairs.push_back(json{{"a", pr.a}, {"a2", pr.a2}, {"reason", pr.reason}});
      k.status = r.separated && hypothesis ? CheckStatus::Passed : CheckStatus::Failed;
      k.witness = json{{"fixed_colors", fixed}, {"sets", std::move(sets)}, {"pairs", std::move(pairs)},
                       {"range_hypothesis", hypothesis}};
      k.detail = "twist spectra about the first two holes separate every pair of summands, and their duals";
      cert.add_check(std::move(k));
    }
    cert.children.push_back(certify_irreducible_generic(s, max_color_));
    for (size_t k = 0; k < summand_colors.size(); ++k) {
      if (dims[k] < 2) continue;
      std::vector<int> sc{summand_colors[k]};
      sc.insert(sc.end(), fixed.begin(), fixed.end());
      std::sort(sc.begin(), sc.end());
      cert.children.push_back(node(n - 1, sc));
    }
    cert.cited.push_back("a subgroup whose projections onto pairwise non-isomorphic, non-dual simple factors are "
                         "onto surjects onto their product");
    cert.cited.push_back("an irreducible representation whose restriction has dense, pairwise non-isomorphic and "
                         "non-dual summands, with at most one of dimension 1 and one of dimension 2, has image "
                         "dense in PSL(V)");
    cert.finalize();
    return cert;
  }

  int max_color_;
  std::map<std::vector<int>, Certificate> memo_;
};

}  // namespace

Certificate certify_dense(int n, const std::vector<int>& colors, int max_color) {
  if (max_color <= 0) throw std::invalid_argument("max_color bound must be positive");
  DenseDriver driver(max_color);
  return driver.node(n, colors);
}

}  // namespace tqft
