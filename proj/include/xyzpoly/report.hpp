#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace xyzpoly {

enum class CheckStatus { Pass, Fail, SoftFail };

const char* to_string(CheckStatus s) noexcept;

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;        // human-readable summary or obstruction
  nlohmann::json residual;   // null on pass; difference polynomial or residual otherwise
  double seconds = 0;
};

/// Outcome of an individual verification. `ok` decides pass/fail; `detail`
/// and `residual` are recorded either way.
struct Outcome {
  bool ok = true;
  std::string detail;
  nlohmann::json residual;
};

/// Ordered list of named checks. A failing or throwing check is recorded and
/// never aborts the remaining ones.
class VerificationReport {
 public:
  const std::vector<CheckResult>& checks() const { return checks_; }

  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void append(const VerificationReport& other);
  /// Runs fn, timing it; exceptions become failures carrying the message.
  /// When soft is set a failure is recorded as SoftFail.
  const CheckResult& run(const std::string& id, const std::function<Outcome()>& fn,
                         bool soft = false);

  /// True iff no check has status Fail.
  bool passed() const;
  size_t count(CheckStatus s) const;

  nlohmann::json to_json(bool with_timings = true) const;
  std::string to_text(bool with_timings = true) const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace xyzpoly
