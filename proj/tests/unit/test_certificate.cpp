#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tqft/certificate.hpp"
#include "tqft/density.hpp"
#include "tqft/irreducibility.hpp"

using namespace tqft;
using nlohmann::json;

namespace {

const RingSpec P7 = RingSpec::root_of_unity(7);

json& check_witness(json& cert, const std::string& name) {
  for (auto& k : cert["checks"])
    if (k["name"] == name) return k["witness"];
  throw std::runtime_error("no check " + name);
}

ReplayReport replay_json(const json& j) { return replay(certificate_from_json(j)); }

std::vector<Certificate> samples() {
  return {certify_v04(P7, 1, 1, 3, 3), certify_v04(RingSpec::generic(), 1, 1, 1, 1),
          certify_irreducible(5, 1, 2, {2, 2}), certify_irreducible(5, 0, 5, {1, 1, 1, 1, 2}),
          certify_dense(4, {1, 1, 1, 1}), certify_dense(5, {1, 1, 1, 1, 2}), certify_dense(4, {1, 1, 1, 3})};
}

}  // namespace

TEST(Certificate, StatusStrings) {
  for (CertStatus s : {CertStatus::Certified, CertStatus::Failed, CertStatus::Vacuous, CertStatus::NotApplicable})
    EXPECT_EQ(cert_status_from_string(to_string(s)), s);
  EXPECT_EQ(to_string(CertStatus::Certified), "CERTIFIED");
  EXPECT_EQ(to_string(CertStatus::NotApplicable), "NOT_APPLICABLE");
  EXPECT_THROW(cert_status_from_string("MAYBE"), std::invalid_argument);
}

TEST(Certificate, FinalizeRules) {
  Certificate empty;
  empty.finalize();
  EXPECT_EQ(empty.status, CertStatus::Failed);
  Certificate c;
  Check k;
  k.name = "x";
  k.kind = check_kind::kInfo;
  k.status = CheckStatus::Passed;
  c.add_check(k);
  Certificate vac;
  vac.status = CertStatus::Vacuous;
  c.children.push_back(vac);
  c.finalize();
  EXPECT_EQ(c.status, CertStatus::Certified);
  c.children.front().assumptions.push_back("external");
  c.finalize();
  EXPECT_EQ(c.substatus, "modulo_assumption");
  c.children.front().status = CertStatus::Failed;
  c.finalize();
  EXPECT_EQ(c.status, CertStatus::Failed);
}

TEST(Certificate, JsonRoundTrip) {
  for (const Certificate& c : samples()) {
    const json j = to_json(c);
    EXPECT_EQ(j["schema"], kCertificateSchema);
    EXPECT_EQ(to_json(certificate_from_json(j)).dump(), j.dump());
  }
}

TEST(Certificate, ReplayReproducesEveryVerdict) {
  for (const Certificate& c : samples()) {
    const ReplayReport r = replay(c);
    EXPECT_TRUE(r.consistent) << c.claim << (r.mismatches.empty() ? "" : " " + r.mismatches.front());
    EXPECT_EQ(r.status, c.status);
  }
}

TEST(Certificate, Deterministic) {
  const auto a = samples(), b = samples();
  ASSERT_EQ(a.size(), b.size());
  for (size_t k = 0; k < a.size(); ++k) EXPECT_EQ(to_json(a[k]).dump(2), to_json(b[k]).dump(2));
}

TEST(Replay, CollidingSpectrumIsCaught) {
  json j = to_json(certify_v04(P7, 1, 1, 3, 3));
  json& w = check_witness(j, "v_twist_spectrum");
  w["values"][1] = w["values"][0];
  const ReplayReport r = replay_json(j);
  EXPECT_EQ(r.status, CertStatus::Failed);
  EXPECT_FALSE(r.consistent);
}

TEST(Replay, ZeroedRowEntryIsCaught) {
  json j = to_json(certify_v04(P7, 1, 1, 3, 3));
  json& w = check_witness(j, "row_condition");
  for (auto& c : w["values"][0]["num"]["coefficients"]) c = "0";
  EXPECT_EQ(replay_json(j).status, CertStatus::Failed);
}

TEST(Replay, MissingGraphEdgesAreCaught) {
  json j = to_json(certify_v04(P7, 1, 1, 3, 3));
  json& w = check_witness(j, "decomposition_graph");
  json kept = json::array();
  for (const auto& e : w["graph"]["edges"])
    if (e["left"] == 0) kept.push_back(e);
  w["graph"]["edges"] = kept;
  EXPECT_EQ(replay_json(j).status, CertStatus::Failed);
}

TEST(Replay, ForgedEdgeWitnessIsCaught) {
  json j = to_json(certify_v04(P7, 1, 1, 3, 3));
  json& w = check_witness(j, "decomposition_graph");
  for (auto& c : w["graph"]["edges"][0]["witness"]["value"]["num"]["coefficients"]) c = "0";
  EXPECT_EQ(replay_json(j).status, CertStatus::Failed);
}

TEST(Replay, WrongDimensionIsCaught) {
  json j = to_json(certify_v04(P7, 1, 1, 3, 3));
  check_witness(j, "dimension")["dim"] = 3;
  EXPECT_EQ(replay_json(j).status, CertStatus::Failed);
}

TEST(Replay, TamperedInverseIsCaught) {
  json j = to_json(certify_v04(P7, 1, 1, 3, 3));
  json& w = check_witness(j, "fusion_round_trip");
  std::swap(w["inverse"]["entries"][0][0], w["inverse"]["entries"][0][1]);
  EXPECT_EQ(replay_json(j).status, CertStatus::Failed);
}

TEST(Replay, OverstatedStatusIsInconsistent) {
  json j = to_json(certify_dense(4, {1, 1, 1, 1}));
  check_witness(j, "weight_analysis")["exponents"] = json::array({0, 4, 8});
  const ReplayReport r = replay_json(j);
  EXPECT_EQ(r.status, CertStatus::Failed);
  EXPECT_FALSE(r.consistent);
  EXPECT_FALSE(r.mismatches.empty());
}

TEST(Replay, TamperedChildPropagates) {
  json j = to_json(certify_irreducible(5, 0, 5, {1, 1, 1, 1, 2}));
  ASSERT_FALSE(j["children"].empty());
  json* leaf = &j;
  while (!(*leaf)["children"].empty()) leaf = &(*leaf)["children"][0];
  for (auto& k : (*leaf)["checks"])
    if (k["kind"] == check_kind::kDimension) k["witness"]["dim"] = 99;
  EXPECT_EQ(replay_json(j).status, CertStatus::Failed);
}
