#pragma once

// Machine-checkable verdicts.  Every check stores the data needed to re-run
// it (nonzero scalars, admissible triples, graph edges, matrices, exponent
// sets), so replay() can re-verify a certificate without recomputing fusion
// matrices.

#include <string>
#include <vector>

#include <json.hpp>

namespace tqft {

inline constexpr const char* kCertificateSchema = "tqftcert.certificate/1";

enum class CertStatus { Certified, Failed, Vacuous, NotApplicable };
enum class CheckStatus { Passed, Failed, Skipped };

std::string to_string(CertStatus s);
std::string to_string(CheckStatus s);
CertStatus cert_status_from_string(const std::string& s);
CheckStatus check_status_from_string(const std::string& s);

/// Check kinds understood by replay().
namespace check_kind {
inline constexpr const char* kDistinctValues = "distinct_values";
inline constexpr const char* kNonzeroValues = "nonzero_values";
inline constexpr const char* kMatrixInverse = "matrix_inverse";
inline constexpr const char* kConnectivity = "connectivity";
inline constexpr const char* kAdmissibleTriples = "admissible_triples";
inline constexpr const char* kDimension = "dimension";
inline constexpr const char* kDimensionSum = "dimension_sum";
inline constexpr const char* kDimensionConditions = "dimension_conditions";
inline constexpr const char* kIntervalChain = "interval_chain";
inline constexpr const char* kHub = "hub";
inline constexpr const char* kWeightAnalysis = "weight_analysis";
inline constexpr const char* kNoniso = "noniso";
inline constexpr const char* kInfiniteOrder = "infinite_order";
/// Recorded facts with nothing to verify.
inline constexpr const char* kInfo = "info";
}  // namespace check_kind

struct Check {
  std::string name;
  std::string kind;
  CheckStatus status = CheckStatus::Skipped;
  nlohmann::json witness = nlohmann::json::object();
  std::string detail;
};

struct Certificate {
  std::string claim;
  nlohmann::json instance = nlohmann::json::object();
  std::vector<Check> checks;
  /// Unverified inputs the verdict depends on.
  std::vector<std::string> assumptions;
  /// Published results used as assembly logic.
  std::vector<std::string> cited;
  CertStatus status = CertStatus::Failed;
  std::string substatus;
  std::vector<Certificate> children;

  void add_check(Check c) { checks.push_back(std::move(c)); }
  bool all_checks_passed() const;
  /// Sets status from checks and children: CERTIFIED iff every check passed
  /// and every child is CERTIFIED or VACUOUS; otherwise FAILED.  Substatus
  /// becomes "modulo_assumption" when the tree carries assumptions.
  void finalize();
  /// True when this node or any descendant lists an assumption.
  bool has_assumptions() const;
};

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

/// Re-runs one check from its witness.
CheckStatus replay_check(const Check& c);

struct ReplayReport {
  CertStatus status = CertStatus::Failed;
  /// Stored status equals the recomputed one at every node and check.
  bool consistent = false;
  std::vector<std::string> mismatches;
};

/// Re-verifies every check and recomputes every node status bottom-up.
ReplayReport replay(const Certificate& c);

}  // namespace tqft
