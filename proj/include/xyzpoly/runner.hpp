#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "xyzpoly/numeric.hpp"
#include "xyzpoly/report.hpp"

namespace xyzpoly {

/// FNV-1a 64-bit hash, printed as "fnv1a64:%016x".
std::string fnv1a64(const std::string& bytes);

/// Reference polynomials in the interchange format, grouped by family
/// ("P", "s", "sbar", "p", "q", "A") and keyed by decimal index. The
/// checksum covers the compact sorted-key serialization of the objects.
struct GoldenCorpus {
  nlohmann::json objects;
  std::string checksum;

  static const GoldenCorpus& embedded();
  std::string computed_checksum() const;
};

/// The same layout as GoldenCorpus::objects, regenerated from the
/// recurrences, the PDE and the factorizations.
nlohmann::json regenerate_golden_objects();

/// Checksum of the embedded corpus, then one check per object comparing the
/// regenerated serialization to the corpus byte for byte.
VerificationReport golden_check();

struct SuiteConfig {
  std::string section = "all";  // tau, qpoly, factor, eigen, sos, numeric, golden, all
  int n_max = 8;                // tau and q-polynomial range
  int tq_n_max = 8;             // TQ, r_0 and Wronskian checks, capped by n_max
  int k_min = -4, k_max = 4;    // factorization range
  int special_n_max = 3;        // p_n(1/3) and q_n leading coefficients
  int asm_n_max = 9;            // A_n(0) against the ASM product
  int N_max = 9;                // odd chain lengths 3..N_max
  int float_samples = 4;
  uint64_t seed = 7;
  int p_max = 10;
  std::vector<int> P_list = {0, 2, 4};
  NumericConfig numeric;
  bool objects = false;  // attach computed polynomials to the result
};

/// Overrides fields of base with the keys present in j; unknown keys and
/// out-of-range values throw Error(Config).
SuiteConfig config_from_json(const nlohmann::json& j, SuiteConfig base = {});
nlohmann::json config_to_json(const SuiteConfig& c);

struct SuiteResult {
  VerificationReport report;
  nlohmann::json objects;  // null unless requested
};

/// Runs the selected section. "all" is every section except golden. Check
/// failures are recorded, never thrown.
SuiteResult run_suite(const SuiteConfig& config);

/// Report document: config, summary counts and the checks.
nlohmann::json report_document(const SuiteConfig& config, const SuiteResult& result, bool with_timings);

/// 0 iff no non-soft check failed.
int exit_code(const VerificationReport& report);

}  // namespace xyzpoly
