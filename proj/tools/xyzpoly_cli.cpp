#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "xyzpoly/xyzpoly.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfig = 2;

struct Flags {
  std::string config_path;
  std::string out_path;
  std::string format = "text";
  bool no_timings = false;
  bool objects = false;
  std::optional<int> n_max, tq_n_max, k_min, k_max, special_n_max, asm_n_max, N_max, float_samples, p_max,
      samples, numeric_tq_n_max;
  std::optional<uint64_t> seed, numeric_seed;
  std::optional<double> u;
  std::vector<int> P_list, transfer_sizes, norm_sizes, lame_n;
  std::vector<double> nomes;
};

// Frees a C string on scope exit.
struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { xyzp_string_free(p); }
};

void add_range_options(CLI::App* sub, Flags& f) {
  sub->add_option("--n-max", f.n_max, "recurrence and q-polynomial range (-1 skips)");
  sub->add_option("--tq-n-max", f.tq_n_max, "TQ and Wronskian range, capped by --n-max");
  sub->add_option("--k-min", f.k_min, "factorization range start");
  sub->add_option("--k-max", f.k_max, "factorization range end");
  sub->add_option("--special-n-max", f.special_n_max, "p_n(1/3) and q_n leading coefficient range");
  sub->add_option("--asm-n-max", f.asm_n_max, "A_n(0) range");
  sub->add_option("--N-max", f.N_max, "largest odd chain length");
  sub->add_option("--float-samples", f.float_samples, "random zeta samples per chain length");
  sub->add_option("--seed", f.seed, "seed for the exact-vs-float spectrum samples");
  sub->add_option("--p-max", f.p_max, "8VSOS recurrence range");
  sub->add_option("--P-list", f.P_list, "even n for the 8VSOS PDE kernel")->delimiter(',');
  sub->add_option("--nomes,--q", f.nomes, "real nomes for the numeric bridge")->delimiter(',');
  sub->add_option("--samples", f.samples, "sample points per nome");
  sub->add_option("--numeric-seed", f.numeric_seed, "seed for the sample points");
  sub->add_option("--numeric-tq-n-max", f.numeric_tq_n_max, "floating TQ range");
  sub->add_option("--transfer-sizes", f.transfer_sizes, "chain lengths for the transfer matrix")->delimiter(',');
  sub->add_option("--norm-sizes", f.norm_sizes, "chain lengths for the float norm comparison")->delimiter(',');
  sub->add_option("--lame-n", f.lame_n, "n values for the Lame fit")->delimiter(',');
  sub->add_option("--u", f.u, "spectral parameter for the transfer matrix");
}

void add_io_options(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config_path, "JSON config file; flags take precedence");
  sub->add_option("--out", f.out_path, "write the JSON report to this path");
  sub->add_option("--format", f.format, "stdout format")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--no-timings", f.no_timings, "omit wall times so reruns are byte-identical");
  sub->add_flag("--objects", f.objects, "attach computed polynomials to the JSON report");
}

// Config file contents with CLI-only keys split off; flags are applied after.
nlohmann::json load_config(Flags& f, bool format_given) {
  nlohmann::json j = nlohmann::json::object();
  if (f.config_path.empty()) return j;
  std::ifstream in(f.config_path);
  if (!in) throw std::runtime_error("cannot read config file " + f.config_path);
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("config file " + f.config_path + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("config file must hold a JSON object");
  if (j.contains("numeric") && !j["numeric"].is_object()) throw std::runtime_error("numeric must be an object");
  if (j.contains("out")) {
    if (f.out_path.empty()) f.out_path = j["out"].get<std::string>();
    j.erase("out");
  }
  if (j.contains("format")) {
    if (!format_given) f.format = j["format"].get<std::string>();
    if (f.format != "text" && f.format != "json") throw std::runtime_error("format must be text or json");
    j.erase("format");
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polynomial families of the XYZ chain and their verification"};
  app.require_subcommand(1, 1);
  Flags f;

  std::string verify_section = "all";
  struct Entry {
    const char* name;
    const char* help;
  };
  const Entry sections[] = {
      {"tau", "tau-function recurrences s_n, sbar_n"},
      {"qpoly", "q-polynomials P_n(x, z), TQ relation and Wronskian"},
      {"factor", "factorization subfactors p_k, q_k and special values"},
      {"eigen", "exact ground-state vectors and their conjectures"},
      {"sos", "8VSOS recurrence, PDE kernel and bridge"},
      {"numeric", "theta-function bridge at real nomes"},
      {"golden", "regenerate the embedded polynomial corpus and diff it"},
  };
  for (const Entry& e : sections) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_io_options(sub, f);
    add_range_options(sub, f);
  }
  CLI::App* verify = app.add_subcommand("verify", "run the checks of one section or of all sections but golden");
  verify->add_option("section", verify_section, "section name or all")
      ->check(CLI::IsMember({"tau", "qpoly", "factor", "eigen", "sos", "numeric", "golden", "all"}));
  add_io_options(verify, f);
  add_range_options(verify, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitConfig;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  nlohmann::json config;
  try {
    config = load_config(f, chosen->count("--format") > 0);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  config["section"] = name == "verify" ? verify_section : name;
  auto set = [&config](const char* key, const auto& v) {
    if (v) config[key] = *v;
  };
  auto set_numeric = [&config](const char* key, const auto& v) {
    if (v) config["numeric"][key] = *v;
  };
  // Flags override the file; list options are only applied when given.
  set("n_max", f.n_max);
  set("tq_n_max", f.tq_n_max);
  set("k_min", f.k_min);
  set("k_max", f.k_max);
  set("special_n_max", f.special_n_max);
  set("asm_n_max", f.asm_n_max);
  set("N_max", f.N_max);
  set("float_samples", f.float_samples);
  set("seed", f.seed);
  set("p_max", f.p_max);
  if (chosen->count("--P-list")) config["P_list"] = f.P_list;
  if (chosen->count("--nomes")) config["numeric"]["nomes"] = f.nomes;
  if (chosen->count("--transfer-sizes")) config["numeric"]["transfer_sizes"] = f.transfer_sizes;
  if (chosen->count("--norm-sizes")) config["numeric"]["norm_sizes"] = f.norm_sizes;
  if (chosen->count("--lame-n")) config["numeric"]["lame_n"] = f.lame_n;
  set_numeric("samples", f.samples);
  set_numeric("seed", f.numeric_seed);
  set_numeric("tq_n_max", f.numeric_tq_n_max);
  set_numeric("u", f.u);
  // Section subcommands print what they computed; verify only the checks.
  const bool objects = f.objects || name != "verify";

  xyzp_report* report = nullptr;
  const xyzp_status st = xyzp_run(config.dump().c_str(), objects ? 1 : 0, &report);
  if (st != XYZP_OK) {
    std::cerr << (st == XYZP_ERR_CONFIG ? "config error: " : "error: ") << xyzp_last_error() << "\n";
    return st == XYZP_ERR_CONFIG ? kExitConfig : kExitCheckFailure;
  }
  const int timings = f.no_timings ? 0 : 1;
  const int rc = xyzp_report_passed(report) ? kExitPass : kExitCheckFailure;

  OwnedString json;
  if (xyzp_report_json(report, timings, &json.p) != XYZP_OK) {
    std::cerr << "error: " << xyzp_last_error() << "\n";
    xyzp_report_free(report);
    return kExitCheckFailure;
  }
  if (!f.out_path.empty()) {
    std::ofstream out(f.out_path);
    out << json.p << "\n";
    if (!out) {
      std::cerr << "config error: cannot write " << f.out_path << "\n";
      xyzp_report_free(report);
      return kExitConfig;
    }
  }
  if (f.format == "json") {
    std::cout << json.p << "\n";
  } else {
    OwnedString text;
    if (xyzp_report_text(report, timings, &text.p) == XYZP_OK) std::cout << text.p;
  }
  xyzp_report_free(report);
  return rc;
}
