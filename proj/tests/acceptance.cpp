// One line per acceptance criterion; exit status 0 iff all nine pass.
// --stretch raises the q-polynomial range to n <= 40 and the chain length
// to N = 15.

#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "xyzpoly/factor.hpp"
#include "xyzpoly/runner.hpp"

using namespace xyzpoly;

namespace {

struct Criterion {
  int number;
  std::string title;
  double time_limit;  // seconds
  VerificationReport checks;
};

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

VerificationReport select(const VerificationReport& from, const std::function<bool(const std::string&)>& keep) {
  VerificationReport out;
  for (const auto& c : from.checks()) {
    if (keep(c.id)) out.add(c);
  }
  return out;
}

double total_seconds(const Criterion& c) {
  double seconds = 0;
  for (const auto& r : c.checks.checks()) seconds += r.seconds;
  return seconds;
}

bool passes(const Criterion& c) {
  return c.checks.passed() && !c.checks.checks().empty() && total_seconds(c) < c.time_limit;
}

void print_line(const Criterion& c) {
  const double seconds = total_seconds(c);
  const CheckResult* first_failure = nullptr;
  for (const auto& r : c.checks.checks()) {
    if (r.status == CheckStatus::Fail && !first_failure) first_failure = &r;
  }
  const bool in_time = seconds < c.time_limit;
  const bool ok = passes(c);
  std::ostringstream line;
  line << "criterion " << c.number << " " << (ok ? "PASS" : "FAIL") << "  " << c.title << ": "
       << c.checks.count(CheckStatus::Pass) << "/" << c.checks.checks().size() << " checks";
  if (c.checks.count(CheckStatus::SoftFail)) line << ", " << c.checks.count(CheckStatus::SoftFail) << " soft";
  line << ", " << std::fixed << std::setprecision(1) << seconds << " s (limit " << c.time_limit << " s)";
  if (c.checks.checks().empty()) line << "; no checks ran";
  if (!in_time) line << "; over the time limit";
  if (first_failure) line << "; first failure " << first_failure->id << ": " << first_failure->detail;
  std::cout << line.str() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  const bool stretch = argc > 1 && std::strcmp(argv[1], "--stretch") == 0;
  const int n_max = stretch ? 40 : 20;
  const int N_max = stretch ? 15 : 13;
  std::vector<Criterion> out;

  {
    SuiteConfig c;
    c.section = "golden";
    out.push_back({1, "golden corpus regenerated bit-exactly", 10, run_suite(c).report});
  }

  SuiteConfig tau;
  tau.section = "tau";
  tau.n_max = n_max;
  const VerificationReport tau_rep = run_suite(tau).report;
  SuiteConfig qp;
  qp.section = "qpoly";
  qp.n_max = n_max;
  qp.tq_n_max = 8;
  const VerificationReport qp_rep = run_suite(qp).report;
  {
    VerificationReport r = tau_rep;
    r.append(select(qp_rep, [](const std::string& id) {
      return starts_with(id, "qpoly.r_top_is_s") || starts_with(id, "qpoly.r_0_is_sbar");
    }));
    out.push_back({2, "s_n = tau_{n+1}(z, 1/6), sbar_n = tau_n(z, -1/3), n <= " + std::to_string(n_max), 60,
                   std::move(r)});
  }
  out.push_back({3, "positivity, integrality and degree bound of r_k, n <= " + std::to_string(n_max), 600,
                 select(qp_rep, [](const std::string& id) {
                   return starts_with(id, "qpoly[") || starts_with(id, "qpoly.compute");
                 })});
  out.push_back({4, "TQ, r_0 relation and Wronskian identities, n <= 8", 600,
                 select(qp_rep, [](const std::string& id) {
                   return starts_with(id, "tq_algebraic") || starts_with(id, "r0_relation") ||
                          starts_with(id, "wronskian");
                 })});
  {
    SuiteConfig c;
    c.section = "eigen";
    c.N_max = N_max;
    c.float_samples = 2;
    out.push_back({5, "exact ground states and conjectures 1-4, N <= " + std::to_string(N_max), 1800,
                   run_suite(c).report});
  }

  SuiteConfig fac;
  fac.section = "factor";
  fac.special_n_max = 3;
  fac.asm_n_max = 9;
  const VerificationReport fac_rep = run_suite(fac).report;
  {
    VerificationReport r = select(fac_rep, [](const std::string& id) { return starts_with(id, "special.asm"); });
    // Literal values, independent of the product formula.
    const char* const expected[] = {"1", "2", "7", "42", "429", "7436", "218348", "10850216", "911835460"};
    for (int n = 1; n <= 9; ++n) {
      r.run("asm.literal[n=" + std::to_string(n) + "]", [&expected, n] {
        const BigRat a0 = alt_polynomial(n).coeff(0);
        return Outcome{a0 == BigRat(expected[n - 1]), "A(0) = " + a0.get_str(), {}};
      });
    }
    out.push_back({6, "A_n(0) equals the ASM count, n <= 9", 600, std::move(r)});
  }
  out.push_back({7, "p_n(1/3) and leading coefficient of q_n, n <= 3", 600,
                 select(fac_rep, [](const std::string& id) {
                   return starts_with(id, "special.p_at_third") || starts_with(id, "special.q_leading");
                 })});
  {
    SuiteConfig c;
    c.section = "sos";
    c.p_max = 10;
    c.P_list = {0, 2, 4};
    out.push_back({8, "8VSOS divisions n <= 10, 1-D kernels n in {0, 2, 4}, bridge", 600, run_suite(c).report});
  }
  {
    SuiteConfig c;
    c.section = "numeric";
    out.push_back({9, "theta bridge identities, transfer eigenvalue, Lame fit (soft)", 120, run_suite(c).report});
  }

  bool all = true;
  for (const Criterion& c : out) {
    print_line(c);
    all = all && passes(c);
  }
  std::cout << (all ? "all criteria pass" : "some criteria fail") << std::endl;
  return all ? 0 : 1;
}
