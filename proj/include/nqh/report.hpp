#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nqh/cocycle.hpp"

namespace nqh {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);
CheckStatus parse_check_status(const std::string& s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerifyOptions {
  int trials = 3;
  bool flip_m4_sign = false;
};

/// Outcome of `verify`: one entry per check name, merged over trials and
/// sorted by name. Trial t uses the point sampled with seed + t.
struct VerificationReport {
  int M = 0;
  int N = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckResult> checks;

  /// True iff no check failed.
  bool passed() const;
  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  std::string to_text() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Every identity check on one parameter point, sorted by name.
std::vector<CheckResult> verify_point(const ParameterPoint& p, const VerifyOptions& options = {});

VerificationReport run_verification(int M, int N, std::uint64_t seed, const VerifyOptions& options = {});
/// Single trial on a given point; `seed` is only recorded.
VerificationReport run_verification(const ParameterPoint& p, std::uint64_t seed, const VerifyOptions& options = {});

/// Exact matrix (full, or one level block) with determinants and oracle results.
struct MatrixReport {
  int M = 0;
  int N = 0;
  std::uint64_t seed = 0;
  std::optional<int> level;
  CocycleMatrix matrix;
  std::vector<std::pair<std::string, Rational>> determinants;
  std::vector<OracleCheck> oracles;

  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

MatrixReport build_matrix_report(const ParameterPoint& p, std::uint64_t seed, std::optional<int> level,
                                 OracleOptions options = {});

/// Serialization helpers shared by the CLI and the Python module.
nlohmann::json to_json(const BasisMonomial& b);
nlohmann::json to_json(const ParameterPoint& p);
nlohmann::json to_json(const CocycleMatrix& m);

}  // namespace nqh
