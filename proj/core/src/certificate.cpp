#include "tqft/certificate.hpp"

#include <stdexcept>

#include "tqft/coloring.hpp"
#include "tqft/density.hpp"
#include "tqft/irreducibility.hpp"
#include "tqft/serialize.hpp"

namespace tqft {

using nlohmann::json;

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return "CERTIFIED";
    case CertStatus::Failed: return "FAILED";
    case CertStatus::Vacuous: return "VACUOUS";
    case CertStatus::NotApplicable: return "NOT_APPLICABLE";
  }
  return "FAILED";
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Passed: return "PASSED";
    case CheckStatus::Failed: return "FAILED";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "FAILED";
}

CertStatus cert_status_from_string(const std::string& s) {
  if (s == "CERTIFIED") return CertStatus::Certified;
  if (s == "FAILED") return CertStatus::Failed;
  if (s == "VACUOUS") return CertStatus::Vacuous;
  if (s == "NOT_APPLICABLE") return CertStatus::NotApplicable;
  throw std::invalid_argument("unknown certificate status: " + s);
}

CheckStatus check_status_from_string(const std::string& s) {
  if (s == "PASSED") return CheckStatus::Passed;
  if (s == "FAILED") return CheckStatus::Failed;
  if (s == "SKIPPED") return CheckStatus::Skipped;
  throw std::invalid_argument("unknown check status: " + s);
}

bool Certificate::all_checks_passed() const {
  for (const auto& c : checks)
    if (c.status != CheckStatus::Passed) return false;
  return true;
}

bool Certificate::has_assumptions() const {
  if (!assumptions.empty()) return true;
  for (const auto& c : children)
    if (c.has_assumptions()) return true;
  return false;
}

void Certificate::finalize() {
  bool ok = !checks.empty() && all_checks_passed();
  for (const auto& c : children)
    if (c.status != CertStatus::Certified && c.status != CertStatus::Vacuous) ok = false;
  status = ok ? CertStatus::Certified : CertStatus::Failed;
  if (ok && substatus.empty() && has_assumptions()) substatus = "modulo_assumption";
}

json to_json(const Certificate& c) {
  json checks = json::array();
  for (const auto& k : c.checks)
    checks.push_back(json{{"name", k.name},
                          {"kind", k.kind},
                          {"status", to_string(k.status)},
                          {"witness", k.witness},
                          {"detail", k.detail}});
  json children = json::array();
  for (const auto& ch : c.children) children.push_back(to_json(ch));
  return json{{"schema", kCertificateSchema}, {"claim", c.claim},   {"instance", c.instance},
              {"status", to_string(c.status)}, {"substatus", c.substatus}, {"checks", std::move(checks)},
              {"assumptions", c.assumptions}, {"cited", c.cited},     {"children", std::move(children)}};
}

Certificate certificate_from_json(const json& j) {
  if (j.value("schema", std::string()) != kCertificateSchema)
    throw std::invalid_argument("unsupported certificate schema: " + j.value("schema", std::string("<missing>")));
  Certificate c;
  c.claim = j.at("claim").get<std::string>();
  c.instance = j.value("instance", json::object());
  c.status = cert_status_from_string(j.at("status").get<std::string>());
  c.substatus = j.value("substatus", std::string());
  for (const auto& k : j.at("checks")) {
    Check check;
    check.name = k.at("name").get<std::string>();
    check.kind = k.at("kind").get<std::string>();
    check.status = check_status_from_string(k.at("status").get<std::string>());
    check.witness = k.value("witness", json::object());
    check.detail = k.value("detail", std::string());
    c.checks.push_back(std::move(check));
  }
  c.assumptions = j.value("assumptions", std::vector<std::string>{});
  c.cited = j.value("cited", std::vector<std::string>{});
  for (const auto& ch : j.value("children", json::array())) c.children.push_back(certificate_from_json(ch));
  return c;
}

namespace {

long long dim_of(const json& space, const RingSpec& ring) {
  return dimension(space.at("g").get<int>(), space.at("b").get<int>(), space.at("colors").get<std::vector<int>>(),
                   ring);
}

bool replay_distinct(const json& w) {
  std::vector<Scalar> values;
  for (const auto& v : w.at("values")) values.push_back(scalar_from_json(v));
  return multiplicity_free_check(values).distinct;
}

bool replay_nonzero(const json& w) {
  for (const auto& v : w.at("values"))
    if (fraction_from_json(v).is_zero()) return false;
  return true;
}

bool replay_inverse(const json& w) {
  const RingMatrix m = matrix_from_json(w.at("matrix"));
  const RingMatrix inv = matrix_from_json(w.at("inverse"));
  if (!m.is_square() || inv.rows() != m.cols() || inv.cols() != m.rows()) return false;
  return (m * inv).is_identity() && (inv * m).is_identity();
}

bool replay_connectivity(const json& w) {
  // Edges whose witness fails are rejected by the graph reader.
  const DecompositionGraph g = decomposition_graph_from_json(w.at("graph"));
  const std::string mode = w.at("mode").get<std::string>();
  if (mode != "undirected" && mode != "strong") throw std::invalid_argument("unknown connectivity mode: " + mode);
  return connectivity(g, mode == "strong" ? ConnectivityMode::Strong : ConnectivityMode::Undirected).connected;
}

bool replay_triples(const json& w) {
  const RingSpec ring = ring_from_json(w.at("ring"));
  for (const auto& t : w.at("triples"))
    if (!is_admissible_triple(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>(), ring)) return false;
  return true;
}

bool replay_dimension(const json& w) {
  const RingSpec ring = ring_from_json(w.at("ring"));
  return dim_of(w, ring) == w.at("dim").get<long long>();
}

bool replay_dimension_sum(const json& w) {
  const RingSpec ring = ring_from_json(w.at("ring"));
  const long long total = w.at("dim").get<long long>();
  if (dim_of(w.at("total"), ring) != total) return false;
  long long sum = 0;
  for (const auto& part : w.at("parts")) {
    long long prod = 1;
    for (const auto& factor : part) prod *= dim_of(factor, ring);
    sum += prod;
  }
  return sum == total;
}

bool replay_dimension_conditions(const json& w) {
  return dimension_conditions(w.at("dims").get<std::vector<long long>>()).ok;
}

bool replay_chain(const json& w) {
  const RingSpec ring = ring_from_json(w.at("ring"));
  const int a = w.at("a").get<int>();
  const auto left = w.at("left_colors").get<std::vector<int>>();
  const auto right = w.at("right_colors").get<std::vector<int>>();
  if (left.empty()) return false;
  for (size_t k = 1; k < left.size(); ++k) {
    if (left[k] != left[k - 1] + 2) return false;
    bool found = false;
    for (const auto& s : w.at("steps")) {
      const int i = s.at("i").get<int>(), j = s.at("j").get<int>();
      if (i != left[k]) continue;
      bool j_present = false;
      for (int r : right) j_present |= r == j;
      if (j_present && is_admissible_triple(i, j, a, ring) && is_admissible_triple(i - 2, j, a, ring)) found = true;
    }
    if (!found) return false;
  }
  return true;
}

bool replay_hub(const json& w) {
  const RingSpec ring = ring_from_json(w.at("ring"));
  const int h = w.at("hub").get<int>();
  for (int c : w.at("left_colors").get<std::vector<int>>())
    if (!is_admissible_triple(c, h, h, ring)) return false;
  for (const auto& f : w.at("hub_factors"))
    if (dim_of(f, ring) <= 0) return false;
  return true;
}

bool replay_weights(const json& w) {
  WeightScalarSet set{w.at("exponents").get<std::vector<long long>>()};
  return weight_scalar_analysis(set).verdict == WeightVerdict::SlFull;
}

bool replay_noniso(const json& w) {
  std::vector<std::pair<int, std::vector<long long>>> sets;
  for (const auto& s : w.at("sets")) sets.emplace_back(s.at("a").get<int>(), s.at("exponents").get<std::vector<long long>>());
  return noniso_compare(sets).separated;
}

bool infinite_order_monomial(const Scalar& s) {
  int k = 0;
  Rational c;
  if (!s.ring().is_generic() || !s.as_monomial(k, c)) return false;
  return k != 0 && (c == 1 || c == -1);
}

bool replay_infinite_order(const json& w) {
  return infinite_order_monomial(scalar_from_json(w.at("ratio"))) &&
         infinite_order_monomial(scalar_from_json(w.at("stated")));
}

}  // namespace

CheckStatus replay_check(const Check& c) {
  const json& w = c.witness;
  bool ok = false;
  try {
    if (c.kind == check_kind::kInfo) return CheckStatus::Passed;
    if (c.kind == check_kind::kDistinctValues) ok = replay_distinct(w);
    else if (c.kind == check_kind::kNonzeroValues) ok = replay_nonzero(w);
    else if (c.kind == check_kind::kMatrixInverse) ok = replay_inverse(w);
    else if (c.kind == check_kind::kConnectivity) ok = replay_connectivity(w);
    else if (c.kind == check_kind::kAdmissibleTriples) ok = replay_triples(w);
    else if (c.kind == check_kind::kDimension) ok = replay_dimension(w);
    else if (c.kind == check_kind::kDimensionSum) ok = replay_dimension_sum(w);
    else if (c.kind == check_kind::kDimensionConditions) ok = replay_dimension_conditions(w);
    else if (c.kind == check_kind::kIntervalChain) ok = replay_chain(w);
    else if (c.kind == check_kind::kHub) ok = replay_hub(w);
    else if (c.kind == check_kind::kWeightAnalysis) ok = replay_weights(w);
    else if (c.kind == check_kind::kNoniso) ok = replay_noniso(w);
    else if (c.kind == check_kind::kInfiniteOrder) ok = replay_infinite_order(w);
    else return CheckStatus::Failed;
  } catch (const std::exception&) {
    return CheckStatus::Failed;
  }
  return ok ? CheckStatus::Passed : CheckStatus::Failed;
}

namespace {

bool supports_terminal(const Certificate& c, const std::vector<CheckStatus>& replayed) {
  for (size_t k = 0; k < c.checks.size(); ++k) {
    const Check& check = c.checks[k];
    if (replayed[k] != CheckStatus::Passed) continue;
    if (check.kind == check_kind::kDimension) {
      const long long d = check.witness.at("dim").get<long long>();
      if (c.status == CertStatus::Vacuous && d <= 1) return true;
      if (c.status == CertStatus::NotApplicable && d == 0) return true;
    }
    if (check.kind == check_kind::kInfo && check.name == "precondition" && c.status == CertStatus::NotApplicable &&
        check.witness.value("satisfied", true) == false)
      return true;
  }
  return false;
}

CertStatus replay_node(const Certificate& c, const std::string& path, ReplayReport& report) {
  std::vector<CheckStatus> replayed;
  bool checks_ok = true;
  for (const auto& check : c.checks) {
    const CheckStatus s = replay_check(check);
    replayed.push_back(s);
    if (s != check.status)
      report.mismatches.push_back(path + ": check '" + check.name + "' stored " + to_string(check.status) +
                                  ", replayed " + to_string(s));
    if (s != CheckStatus::Passed) checks_ok = false;
  }
  bool children_ok = true;
  for (size_t k = 0; k < c.children.size(); ++k) {
    const CertStatus s = replay_node(c.children[k], path + "/" + std::to_string(k), report);
    if (s != CertStatus::Certified && s != CertStatus::Vacuous) children_ok = false;
  }
  CertStatus status = CertStatus::Failed;
  if (c.status == CertStatus::Vacuous || c.status == CertStatus::NotApplicable) {
    if (checks_ok && supports_terminal(c, replayed)) status = c.status;
  } else if (checks_ok && children_ok && !c.checks.empty()) {
    status = CertStatus::Certified;
  }
  if (status != c.status)
    report.mismatches.push_back(path + ": status stored " + to_string(c.status) + ", replayed " + to_string(status));
  return status;
}

}  // namespace

ReplayReport replay(const Certificate& c) {
  ReplayReport report;
  report.status = replay_node(c, c.claim, report);
  report.consistent = report.mismatches.empty();
  return report;
}

}  // namespace tqft
