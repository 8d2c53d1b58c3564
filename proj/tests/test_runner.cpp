#include <doctest.h>

#include "xyzpoly/errors.hpp"
#include "xyzpoly/runner.hpp"

using namespace xyzpoly;

namespace {

const CheckResult* find(const VerificationReport& rep, const std::string& id) {
  for (const auto& c : rep.checks()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

ErrorCode config_code(const nlohmann::json& j) {
  try {
    config_from_json(j);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("embedded corpus checksum") {
  const GoldenCorpus& g = GoldenCorpus::embedded();
  CHECK(g.computed_checksum() == g.checksum);
  CHECK(fnv1a64("") == "fnv1a64:cbf29ce484222325");
  CHECK(fnv1a64("a") == "fnv1a64:af63dc4c8601ec8c");
}

TEST_CASE("golden regeneration") {
  const VerificationReport rep = golden_check();
  size_t objects = 0;
  for (const auto& c : rep.checks()) {
    if (c.id == "golden.checksum" || c.id == "golden.regenerate") {
      CHECK(c.status == CheckStatus::Pass);
      continue;
    }
    ++objects;
    INFO(c.id << ": " << c.detail);
    if (c.id == "golden.A[9]") {
      // The corpus entry is twice the regenerated A_9; A_9(0) must equal the
      // ASM count 911835460, which the regenerated polynomial does.
      CHECK(c.status == CheckStatus::Fail);
      CHECK(c.detail.find("corpus = 2 * regenerated") != std::string::npos);
      CHECK(c.residual["regenerated"]["coeffs"][0] == "911835460");
    } else {
      CHECK(c.status == CheckStatus::Pass);
    }
  }
  CHECK(objects == 5 + 11 + 7 + 7 + 7 + 9);
}

TEST_CASE("config parsing") {
  const SuiteConfig c = config_from_json({{"n_max", 3}, {"P_list", {0, 2}}, {"numeric", {{"samples", 5}}}});
  CHECK(c.n_max == 3);
  CHECK(c.P_list == std::vector<int>{0, 2});
  CHECK(c.numeric.samples == 5);
  CHECK(c.N_max == SuiteConfig{}.N_max);
  const SuiteConfig round = config_from_json(config_to_json(c));
  CHECK(config_to_json(round) == config_to_json(c));

  CHECK(config_code({{"bogus", 1}}) == ErrorCode::Config);
  CHECK(config_code({{"n_max", "4"}}) == ErrorCode::Config);
  CHECK(config_code({{"P_list", {1}}}) == ErrorCode::Config);
  CHECK(config_code({{"section", "everything"}}) == ErrorCode::Config);
  CHECK(config_code({{"k_min", 3}, {"k_max", 1}}) == ErrorCode::Config);
  CHECK(config_code({{"numeric", {{"nomes", {1.5}}}}}) == ErrorCode::Config);
  CHECK(config_code(nlohmann::json::array()) == ErrorCode::Config);
}

TEST_CASE("small suite") {
  SuiteConfig c;
  c.n_max = 3;
  c.tq_n_max = 2;
  c.k_min = -2;
  c.k_max = 2;
  c.special_n_max = 2;
  c.asm_n_max = 5;
  c.N_max = 5;
  c.float_samples = 1;
  c.p_max = 4;
  c.P_list = {0, 2};
  c.numeric.nomes = {0.1};
  c.numeric.samples = 4;
  c.numeric.transfer_sizes = {3};
  c.numeric.norm_sizes = {3};
  c.objects = true;
  const SuiteResult r = run_suite(c);
  for (const auto& chk : r.report.checks()) {
    INFO(chk.id << ": " << chk.detail);
    CHECK(chk.status != CheckStatus::Fail);
  }
  CHECK(exit_code(r.report) == 0);
  CHECK(find(r.report, "tau.s_is_tau_1/6[n=3]") != nullptr);
  CHECK(find(r.report, "wronskian[n=2].identity") != nullptr);
  CHECK(find(r.report, "golden.checksum") == nullptr);
  CHECK(r.objects["P"].contains("3"));
  CHECK(r.objects["ground_vector"].contains("5"));
  const nlohmann::json doc = report_document(c, r, false);
  CHECK(doc["summary"]["fail"] == 0);
  CHECK(doc["config"]["n_max"] == 3);
}

TEST_CASE("empty suite passes") {
  SuiteConfig c;
  c.section = "tau";
  c.n_max = -1;
  CHECK(run_suite(c).report.checks().empty());
}
