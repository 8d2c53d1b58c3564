#include "xyzpoly/xyzpoly.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "xyzpoly/eigen.hpp"
#include "xyzpoly/errors.hpp"
#include "xyzpoly/factor.hpp"
#include "xyzpoly/numeric.hpp"
#include "xyzpoly/poly_json.hpp"
#include "xyzpoly/qpoly.hpp"
#include "xyzpoly/runner.hpp"
#include "xyzpoly/sos.hpp"
#include "xyzpoly/tau.hpp"

struct xyzp_report {
  xyzpoly::SuiteConfig config;
  xyzpoly::SuiteResult result;
};

namespace {

using xyzpoly::ErrorCode;

thread_local std::string g_last_error;

xyzp_status status_of(ErrorCode code) {
  // ErrorCode enumerators are declared in the order of the C codes 1..18.
  return static_cast<xyzp_status>(static_cast<int>(code) + 1);
}

xyzp_status fail(xyzp_status s, const std::string& message) {
  g_last_error = message;
  return s;
}

// Runs fn, mapping exceptions to status codes and recording the message.
template <class F>
xyzp_status guarded(F&& fn) {
  g_last_error.clear();
  try {
    fn();
    return XYZP_OK;
  } catch (const xyzpoly::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(XYZP_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(XYZP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(XYZP_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nlohmann::json object_json(const std::string& family, int index) {
  using namespace xyzpoly;
  auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::InvalidArgument, what);
  };
  if (family == "s") {
    RecurrenceFamily& s = cached_s_family();
    s.extend(std::min(index, 0), std::max(index, 1));
    return to_json(s.at(index));
  }
  if (family == "sbar") {
    require(index >= 0, "sbar index must be nonnegative");
    return to_json(sbar_sequence(index).back());
  }
  if (family == "P") {
    require(index >= 0, "P index must be nonnegative");
    return to_json(qpoly(index).poly);
  }
  if (family == "p") return to_json(p_poly(index));
  if (family == "q") return to_json(q_poly(index));
  if (family == "A") {
    require(index >= 1, "A index must be at least 1");
    return to_json(alt_polynomial(index));
  }
  if (family == "p_sos") {
    require(index >= 0, "p_sos index must be nonnegative");
    return to_json(sos_p(index));
  }
  if (family == "P_sos") return to_json(sos_P_kernel(index).P);
  if (family == "ground_vector") {
    require(index >= 3 && index % 2 == 1, "ground_vector needs odd N >= 3");
    return cached_ground_vector(index).to_json();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family " + family);
}

}  // namespace

extern "C" {

const char* xyzp_version(void) { return "1.0.0"; }

const char* xyzp_status_name(xyzp_status status) {
  if (status == XYZP_OK) return "ok";
  if (status == XYZP_ERR_INTERNAL) return "internal";
  if (status >= XYZP_ERR_INVALID_ARGUMENT && status <= XYZP_ERR_CONFIG) {
    return xyzpoly::to_string(static_cast<ErrorCode>(static_cast<int>(status) - 1));
  }
  return "unknown";
}

const char* xyzp_last_error(void) { return g_last_error.c_str(); }

void xyzp_string_free(char* s) { std::free(s); }

xyzp_status xyzp_object_json(const char* family, int index, char** out_json) {
  if (!family || !out_json) return fail(XYZP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out_json = copy_string(object_json(family, index).dump()); });
}

xyzp_status xyzp_tau_json(long xi_num, long xi_den, int n, char** out_json) {
  if (!out_json) return fail(XYZP_ERR_INVALID_ARGUMENT, "null argument");
  if (xi_den == 0) return fail(XYZP_ERR_INVALID_ARGUMENT, "zero denominator");
  return guarded([&] {
    const xyzpoly::BigRat xi = xyzpoly::make_rat(xi_num, xi_den);
    xyzpoly::RecurrenceFamily& fam = xyzpoly::cached_tau_family(xi);
    fam.extend(std::min(n, 0), std::max(n, 1));
    *out_json = copy_string(xyzpoly::to_json(fam.at(n)).dump());
  });
}

xyzp_status xyzp_theta(int k, double u_re, double u_im, double q_re, double q_im, int deriv, double* out_re,
                       double* out_im) {
  if (!out_re || !out_im) return fail(XYZP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const xyzpoly::cplx v = xyzpoly::theta(k, {u_re, u_im}, {q_re, q_im}, deriv);
    *out_re = v.real();
    *out_im = v.imag();
  });
}

xyzp_status xyzp_default_config(char** out_json) {
  if (!out_json) return fail(XYZP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out_json = copy_string(xyzpoly::config_to_json(xyzpoly::SuiteConfig{}).dump()); });
}

xyzp_status xyzp_run(const char* config_json, int with_objects, xyzp_report** out_report) {
  if (!out_report) return fail(XYZP_ERR_INVALID_ARGUMENT, "null argument");
  *out_report = nullptr;
  xyzpoly::SuiteConfig config;
  if (config_json && *config_json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::exception& e) {
      return fail(XYZP_ERR_CONFIG, std::string("config is not valid JSON: ") + e.what());
    }
    const xyzp_status s = guarded([&] { config = xyzpoly::config_from_json(j); });
    if (s != XYZP_OK) return s;
  }
  if (with_objects) config.objects = true;
  return guarded([&] {
    auto* r = new xyzp_report{config, xyzpoly::run_suite(config)};
    *out_report = r;
  });
}

void xyzp_report_free(xyzp_report* report) { delete report; }

int xyzp_report_passed(const xyzp_report* report) { return report && report->result.report.passed() ? 1 : 0; }

size_t xyzp_report_count(const xyzp_report* report, xyzp_check_status status) {
  if (!report) return 0;
  switch (status) {
    case XYZP_CHECK_PASS: return report->result.report.count(xyzpoly::CheckStatus::Pass);
    case XYZP_CHECK_FAIL: return report->result.report.count(xyzpoly::CheckStatus::Fail);
    case XYZP_CHECK_SOFT_FAIL: return report->result.report.count(xyzpoly::CheckStatus::SoftFail);
  }
  return 0;
}

size_t xyzp_report_size(const xyzp_report* report) { return report ? report->result.report.checks().size() : 0; }

xyzp_status xyzp_report_json(const xyzp_report* report, int with_timings, char** out_json) {
  if (!report || !out_json) return fail(XYZP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out_json = copy_string(xyzpoly::report_document(report->config, report->result, with_timings != 0).dump(1));
  });
}

xyzp_status xyzp_report_text(const xyzp_report* report, int with_timings, char** out_text) {
  if (!report || !out_text) return fail(XYZP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out_text = copy_string(report->result.report.to_text(with_timings != 0)); });
}

}  // extern "C"
