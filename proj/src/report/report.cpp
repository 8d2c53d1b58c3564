#include "xyzpoly/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "xyzpoly/errors.hpp"

namespace xyzpoly {

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::SoftFail: return "soft-fail";
  }
  return "unknown";
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

const CheckResult& VerificationReport::run(const std::string& id, const std::function<Outcome()>& fn,
                                           bool soft) {
  CheckResult r;
  r.id = id;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = fn();
    r.status = o.ok ? CheckStatus::Pass : (soft ? CheckStatus::SoftFail : CheckStatus::Fail);
    r.detail = std::move(o.detail);
    r.residual = std::move(o.residual);
  } catch (const PolynomialityViolation& e) {
    r.status = soft ? CheckStatus::SoftFail : CheckStatus::Fail;
    r.detail = std::string(to_string(e.code())) + " at index " + std::to_string(e.index()) + ": " + e.what();
    r.residual = nlohmann::json::parse(e.remainder(), nullptr, false);
  } catch (const NotDivisible& e) {
    r.status = soft ? CheckStatus::SoftFail : CheckStatus::Fail;
    r.detail = std::string(to_string(e.code())) + ": " + e.what();
    r.residual = nlohmann::json::parse(e.remainder(), nullptr, false);
  } catch (const Error& e) {
    r.status = soft ? CheckStatus::SoftFail : CheckStatus::Fail;
    r.detail = std::string(to_string(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    r.status = soft ? CheckStatus::SoftFail : CheckStatus::Fail;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  checks_.push_back(std::move(r));
  return checks_.back();
}

bool VerificationReport::passed() const { return count(CheckStatus::Fail) == 0; }

size_t VerificationReport::count(CheckStatus s) const {
  size_t k = 0;
  for (const auto& c : checks_) k += c.status == s ? 1 : 0;
  return k;
}

nlohmann::json VerificationReport::to_json(bool with_timings) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j{{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}};
    if (!c.residual.is_null()) j["residual"] = c.residual;
    if (with_timings) j["seconds"] = c.seconds;
    arr.push_back(std::move(j));
  }
  return nlohmann::json{{"checks", std::move(arr)},
                        {"summary",
                         {{"pass", count(CheckStatus::Pass)},
                          {"fail", count(CheckStatus::Fail)},
                          {"soft_fail", count(CheckStatus::SoftFail)}}}};
}

std::string VerificationReport::to_text(bool with_timings) const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.status == CheckStatus::Pass ? "PASS " : c.status == CheckStatus::Fail ? "FAIL " : "SOFT ")
       << c.id;
    if (!c.detail.empty()) os << "  " << c.detail;
    if (with_timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  (%.3fs)", c.seconds);
      os << buf;
    }
    os << "\n";
  }
  os << count(CheckStatus::Pass) << " passed, " << count(CheckStatus::Fail) << " failed, "
     << count(CheckStatus::SoftFail) << " soft-failed\n";
  return os.str();
}

}  // namespace xyzpoly
