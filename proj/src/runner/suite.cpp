#include <algorithm>
#include <set>

#include "xyzpoly/eigen.hpp"
#include "xyzpoly/errors.hpp"
#include "xyzpoly/factor.hpp"
#include "xyzpoly/poly_json.hpp"
#include "xyzpoly/qpoly.hpp"
#include "xyzpoly/runner.hpp"
#include "xyzpoly/sos.hpp"
#include "xyzpoly/tau.hpp"

namespace xyzpoly {

namespace {

const std::set<std::string> kSections = {"tau", "qpoly", "factor", "eigen", "sos", "numeric", "golden", "all"};

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::Config, what); }

int get_int(const nlohmann::json& j, const char* key, int lo, int hi) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) config_error(std::string(key) + " must be an integer");
  const long long x = v.get<long long>();
  if (x < lo || x > hi) {
    config_error(std::string(key) + " = " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                 std::to_string(hi) + "]");
  }
  return static_cast<int>(x);
}

std::vector<int> get_int_list(const nlohmann::json& j, const char* key, int lo, int hi) {
  const auto& v = j.at(key);
  if (!v.is_array()) config_error(std::string(key) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer() || e.get<long long>() < lo || e.get<long long>() > hi) {
      config_error(std::string(key) + " entries must be integers in [" + std::to_string(lo) + ", " +
                   std::to_string(hi) + "]");
    }
    out.push_back(e.get<int>());
  }
  return out;
}

NumericConfig numeric_from_json(const nlohmann::json& j, NumericConfig c) {
  for (const auto& [key, v] : j.items()) {
    if (key == "nomes") {
      if (!v.is_array()) config_error("numeric.nomes must be an array");
      c.nomes.clear();
      for (const auto& e : v) {
        if (!e.is_number() || !(e.get<double>() > 0 && e.get<double>() < 1)) {
          config_error("numeric.nomes entries must lie in (0, 1)");
        }
        c.nomes.push_back(e.get<double>());
      }
    } else if (key == "samples") {
      c.samples = get_int(j, "samples", 1, 1000);
    } else if (key == "seed") {
      if (!v.is_number_unsigned() && !v.is_number_integer()) config_error("numeric.seed must be an integer");
      c.seed = v.get<uint64_t>();
    } else if (key == "tq_n_max") {
      c.tq_n_max = get_int(j, "tq_n_max", -1, 8);
    } else if (key == "transfer_sizes") {
      c.transfer_sizes = get_int_list(j, "transfer_sizes", 1, 9);
    } else if (key == "lame_n") {
      c.lame_n = get_int_list(j, "lame_n", 0, 4);
    } else if (key == "norm_sizes") {
      c.norm_sizes = get_int_list(j, "norm_sizes", 3, 11);
      for (int n : c.norm_sizes) {
        if (n % 2 == 0) config_error("numeric.norm_sizes entries must be odd");
      }
    } else if (key == "u") {
      if (!v.is_number()) config_error("numeric.u must be a number");
      c.u = v.get<double>();
    } else {
      config_error("unknown key numeric." + key);
    }
  }
  return c;
}

}  // namespace

SuiteConfig config_from_json(const nlohmann::json& j, SuiteConfig c) {
  if (!j.is_object()) config_error("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "section") {
      if (!v.is_string() || !kSections.count(v.get<std::string>())) config_error("unknown section");
      c.section = v.get<std::string>();
    } else if (key == "n_max") {
      c.n_max = get_int(j, "n_max", -1, 100);
    } else if (key == "tq_n_max") {
      c.tq_n_max = get_int(j, "tq_n_max", -1, 20);
    } else if (key == "k_min") {
      c.k_min = get_int(j, "k_min", -10, 10);
    } else if (key == "k_max") {
      c.k_max = get_int(j, "k_max", -10, 10);
    } else if (key == "special_n_max") {
      c.special_n_max = get_int(j, "special_n_max", -1, 6);
    } else if (key == "asm_n_max") {
      c.asm_n_max = get_int(j, "asm_n_max", 0, 14);
    } else if (key == "N_max") {
      c.N_max = get_int(j, "N_max", 0, 25);
    } else if (key == "float_samples") {
      c.float_samples = get_int(j, "float_samples", 0, 100);
    } else if (key == "seed") {
      if (!v.is_number_integer()) config_error("seed must be an integer");
      c.seed = v.get<uint64_t>();
    } else if (key == "p_max") {
      c.p_max = get_int(j, "p_max", 0, 40);
    } else if (key == "P_list") {
      c.P_list = get_int_list(j, "P_list", 0, 8);
      for (int n : c.P_list) {
        if (n % 2 != 0) config_error("P_list entries must be even");
      }
    } else if (key == "numeric") {
      if (!v.is_object()) config_error("numeric must be an object");
      c.numeric = numeric_from_json(v, c.numeric);
    } else if (key == "objects") {
      if (!v.is_boolean()) config_error("objects must be a boolean");
      c.objects = v.get<bool>();
    } else {
      config_error("unknown config key " + key);
    }
  }
  if (c.k_min > c.k_max) config_error("k_min > k_max");
  return c;
}

nlohmann::json config_to_json(const SuiteConfig& c) {
  return {{"section", c.section},
          {"n_max", c.n_max},
          {"tq_n_max", c.tq_n_max},
          {"k_min", c.k_min},
          {"k_max", c.k_max},
          {"special_n_max", c.special_n_max},
          {"asm_n_max", c.asm_n_max},
          {"N_max", c.N_max},
          {"float_samples", c.float_samples},
          {"seed", c.seed},
          {"p_max", c.p_max},
          {"P_list", c.P_list},
          {"objects", c.objects},
          {"numeric",
           {{"nomes", c.numeric.nomes},
            {"samples", c.numeric.samples},
            {"seed", c.numeric.seed},
            {"tq_n_max", c.numeric.tq_n_max},
            {"transfer_sizes", c.numeric.transfer_sizes},
            {"lame_n", c.numeric.lame_n},
            {"norm_sizes", c.numeric.norm_sizes},
            {"u", c.numeric.u}}}};
}

namespace {

std::string idx(const char* what, int n) { return std::string(what) + "[n=" + std::to_string(n) + "]"; }

void tau_section(const SuiteConfig& c, SuiteResult& out) {
  VerificationReport& rep = out.report;
  if (c.n_max < 0) return;
  RecurrenceFamily& s = cached_s_family();
  rep.run("tau.s_family[" + std::to_string(-c.n_max) + ".." + std::to_string(c.n_max + 1) + "]", [&] {
    s.extend(-std::max(c.n_max, 1), c.n_max + 1);
    return Outcome{true, "all exact divisions succeeded", {}};
  });
  RecurrenceFamily& t16 = cached_tau_family(make_rat(1, 6));
  for (int n = 0; n <= c.n_max; ++n) {
    rep.run(idx("tau.s_is_tau_1/6", n), [&s, &t16, n] {
      const UniPoly diff = s.at(n) - t16.at(n + 1);
      return Outcome{diff.is_zero(), "s_n = tau_{n+1}(z, 1/6)", diff.is_zero() ? nlohmann::json() : to_json(diff)};
    });
  }
  std::vector<UniPoly> sbar;
  rep.run("tau.sbar_family[0.." + std::to_string(c.n_max) + "]", [&] {
    sbar = sbar_sequence(c.n_max);
    return Outcome{true, "all exact divisions succeeded", {}};
  });
  for (size_t n = 0; n < sbar.size(); ++n) {
    rep.run(idx("tau.sbar_integral", static_cast<int>(n)), [&sbar, n] {
      const bool ok = has_integer_coeffs(sbar[n]) && has_nonnegative_coeffs(sbar[n]);
      return Outcome{ok, "", ok ? nlohmann::json() : to_json(sbar[n])};
    });
  }
  if (c.objects) {
    for (int n = -c.n_max; n <= c.n_max + 1 && s.contains(n); ++n) out.objects["s"][std::to_string(n)] = to_json(s.at(n));
    for (size_t n = 0; n < sbar.size(); ++n) out.objects["sbar"][std::to_string(n)] = to_json(sbar[n]);
  }
}

void qpoly_section(const SuiteConfig& c, SuiteResult& out) {
  VerificationReport& rep = out.report;
  const auto sbar = c.n_max >= 0 ? sbar_sequence(c.n_max) : std::vector<UniPoly>{};
  for (int n = 0; n <= c.n_max; ++n) {
    const QPolynomial* p = nullptr;
    rep.run(idx("qpoly.compute", n), [&] {
      p = &qpoly(n);
      return Outcome{true, "method " + p->method, {}};
    });
    if (!p) continue;
    rep.append(check_qpoly_invariants(*p));
    rep.run(idx("qpoly.r_top_is_s", n), [&] {
      const UniPoly diff = p->coeffs.back() - cached_s_family().at(n);
      return Outcome{diff.is_zero(), "r_n = s_n", diff.is_zero() ? nlohmann::json() : to_json(diff)};
    });
    rep.run(idx("qpoly.r_0_is_sbar", n), [&] {
      const UniPoly diff = p->coeffs.front() - sbar[static_cast<size_t>(n)];
      return Outcome{diff.is_zero(), "r_0 = sbar_n", diff.is_zero() ? nlohmann::json() : to_json(diff)};
    });
    if (c.objects) out.objects["P"][std::to_string(n)] = to_json(p->poly);
  }
  for (int n = 0; n <= std::min(c.n_max, c.tq_n_max); ++n) {
    rep.append(verify_TQ(n));
    rep.append(verify_r0_relation(n));
    try {
      const Wronskian w = wronskian(n);
      rep.append(w.report);
    } catch (const Error& e) {
      rep.add(CheckResult{idx("wronskian", n), CheckStatus::Fail, std::string(to_string(e.code())) + ": " + e.what(),
                          {}, 0});
    }
  }
}

void factor_section(const SuiteConfig& c, SuiteResult& out) {
  VerificationReport& rep = out.report;
  rep.append(check_factorizations(c.k_min, c.k_max));
  rep.append(check_pq_symmetries(c.k_min, std::max(c.k_min, c.k_max - 1)));
  rep.append(special_values(c.special_n_max, c.asm_n_max));
  if (c.objects) {
    for (int k = c.k_min; k <= c.k_max; ++k) {
      try {
        out.objects["p"][std::to_string(k)] = to_json(p_poly(k));
        out.objects["q"][std::to_string(k)] = to_json(q_poly(k));
      } catch (const Error&) {
        // recorded by check_factorizations
      }
    }
  }
}

void eigen_section(const SuiteConfig& c, SuiteResult& out) {
  VerificationReport& rep = out.report;
  if (c.N_max >= 3) {
    rep.append(check_couplings({make_rat(5, 7), BigRat(0), BigRat(-3), make_rat(1, 9)}));
  }
  for (int n_sites = 3; n_sites <= c.N_max; n_sites += 2) {
    const GroundStateVector* g = nullptr;
    rep.run("eigen.ground_vector[N=" + std::to_string(n_sites) + "]", [&] {
      g = &cached_ground_vector(n_sites);
      return Outcome{true,
                     std::to_string(g->samples_used.size()) + " samples, max degree " + std::to_string(g->max_degree),
                     {}};
    });
    if (!g) continue;
    rep.append(verify_ground_vector(*g));
    rep.append(verify_conjecture_1(n_sites));
    rep.append(verify_conjectures_2_3_4(n_sites));
    rep.append(verify_symmetries(n_sites));
    if (c.float_samples > 0) rep.append(float_spectrum_check(n_sites, c.float_samples, c.seed));
    if (c.objects) out.objects["ground_vector"][std::to_string(n_sites)] = g->to_json();
  }
}

void sos_section(const SuiteConfig& c, SuiteResult& out) {
  out.report.append(verify_sos(c.p_max, c.P_list));
  if (c.objects) {
    for (int n = 0; n <= c.p_max; ++n) {
      try {
        out.objects["p_sos"][std::to_string(n)] = to_json(sos_p(n));
      } catch (const Error&) {
        break;
      }
    }
    for (int n : c.P_list) {
      try {
        out.objects["P_sos"][std::to_string(n)] = to_json(sos_P_kernel(n).P);
      } catch (const Error&) {
      }
    }
  }
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& c) {
  if (!kSections.count(c.section)) config_error("unknown section " + c.section);
  SuiteResult out;
  const bool all = c.section == "all";
  if (all || c.section == "tau") tau_section(c, out);
  if (all || c.section == "qpoly") qpoly_section(c, out);
  if (all || c.section == "factor") factor_section(c, out);
  if (all || c.section == "eigen") eigen_section(c, out);
  if (all || c.section == "sos") sos_section(c, out);
  if (all || c.section == "numeric") out.report.append(verify_numeric(c.numeric));
  if (c.section == "golden") {
    out.report.append(golden_check());
    if (c.objects) out.objects = regenerate_golden_objects();
  }
  return out;
}

nlohmann::json report_document(const SuiteConfig& config, const SuiteResult& result, bool with_timings) {
  nlohmann::json doc = result.report.to_json(with_timings);
  doc["config"] = config_to_json(config);
  doc["schema"] = "xyzpoly-report/1";
  if (!result.objects.is_null()) doc["objects"] = result.objects;
  return doc;
}

int exit_code(const VerificationReport& report) { return report.passed() ? 0 : 1; }

}  // namespace xyzpoly
