#include <doctest.h>

#include <cmath>
#include <numbers>

#include "xyzpoly/errors.hpp"
#include "xyzpoly/numeric.hpp"

using namespace xyzpoly;

namespace {

constexpr double kPi = std::numbers::pi;

void require_all_pass(const VerificationReport& rep) {
  for (const auto& c : rep.checks()) {
    INFO(c.id << ": " << c.detail << " " << c.residual.dump());
    CHECK(c.status == CheckStatus::Pass);
  }
}

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("theta values against mpmath") {
  CHECK(close(theta(1, 0.4, 0.1), 0.427490594110574023277, 1e-14));
  CHECK(close(theta(2, 0.4, 0.1), 1.039976226660166592240, 1e-14));
  CHECK(close(theta(3, cplx(0.3, 0.1), 0.2), cplx(1.338012245244520267733, -0.046698857386200951709), 1e-14));
  CHECK(close(theta(4, cplx(0.3, 0.1), 0.2), cplx(0.664494858454978054574, 0.044248699147754302405), 1e-14));
  CHECK(close(theta(1, 0.4, 0.1, 1), 1.023672855348502959010, 1e-14));
  CHECK(close(theta(1, 0.4, 0.1, 2), -0.343655283040327551900, 1e-14));
  CHECK(close(theta(1, 0.4, 0.1, 3), -0.925807696603515838407, 1e-14));
  CHECK(close(theta(3, 0.7, 0.3, 2), -0.163002753737563675804, 1e-14));
}

TEST_CASE("theta identities and nome range") {
  CHECK(theta(1, 0.0, 0.1) == cplx(0));
  const cplx u(0.3, 0.1);
  CHECK(std::abs(theta(1, u + kPi, 0.1) + theta(1, u, 0.1)) < 1e-12);
  for (double re : {0.1, 0.9, 2.3}) {
    const cplx v(re, -0.2);
    CHECK(close(theta(4, v, 0.15), theta(3, v + kPi / 2, 0.15), 1e-12));
  }
  CHECK_THROWS_AS(theta(1, 0.1, 1.0), Error);
  CHECK_THROWS_AS(theta(1, 0.1, 0.0), Error);
  CHECK_THROWS_AS(EllipticContext(cplx(0.6, 0.9)), Error);
  ErrorCode code = ErrorCode::InvalidArgument;
  try {
    theta(2, 0.0, -1.5);
  } catch (const Error& e) {
    code = e.code();
  }
  CHECK(code == ErrorCode::NomeOutOfRange);
}

TEST_CASE("weierstrass p is even with a double pole at 0") {
  const double q = 0.1;
  const cplx v(0.35, 0.2);
  CHECK(close(weierstrass_p(v, q), weierstrass_p(-v, q), 1e-12));
  const double small = 1e-3;
  CHECK(std::abs(weierstrass_p(small, q) - 1.0 / (small * small)) < 1e-4);
  CHECK(close(weierstrass_p(v + kPi, q), weierstrass_p(v, q), 1e-10));
}

TEST_CASE("variable maps at q = 0.1, u = 0.4") {
  const EllipticContext ctx(0.1);
  const VariableMaps m = variable_maps(ctx, 0.4);
  CHECK(close(m.zeta, 0.294088820645029064610, 1e-13));
  CHECK(close(m.gamma, -4.666435264072479257318, 1e-13));
  require_all_pass(check_variable_maps(ctx, 0.4));
  // zeta -> gamma -> zeta
  const cplx g = (m.zeta + 3.0) / (m.zeta - 1.0);
  CHECK(close((g + 3.0) / (g - 1.0), m.zeta, 1e-12));
  CHECK(close(x_of_u(ctx, 0.4 + kPi / 3) * x_of_u(ctx, 0.4 - 2 * kPi / 3), m.gamma * m.gamma, 1e-10));
}

TEST_CASE("TQ residual and periodicity") {
  const EllipticContext ctx(0.15);
  const auto us = sample_u(ctx, 20, 99);
  CHECK(tq_residual(ctx, 0, us) < 1e-10);
  CHECK(tq_residual(ctx, 3, us) < 1e-10);
  for (const cplx u : us) CHECK(close(q_plus(ctx, 2, -u), q_plus(ctx, 2, u), 1e-12));
  require_all_pass(check_tq(ctx, 4, us));
}

TEST_CASE("transfer matrix and Hamiltonian spectra") {
  const EllipticContext ctx(0.1);
  for (int n_sites : {3, 5}) require_all_pass(transfer_spectrum_check(ctx, 0.4, n_sites));
}

TEST_CASE("Lame fit and exact-vs-numeric norm") {
  std::vector<double> us;
  for (int i = 1; i <= 8; ++i) us.push_back(0.05 + 0.1 * i);
  const VerificationReport l0 = lame_residual_check(0.1, 0, us);
  require_all_pass(l0);
  // No potential at n = 0, so c is free of the p-function constant.
  CHECK(std::abs(l0.checks()[0].residual["c"].get<double>() - 0.3763511527) < 1e-7);
  require_all_pass(lame_residual_check(0.1, 1, us));
  const EllipticContext ctx(0.1);
  for (int n_sites : {3, 5}) require_all_pass(norm_bridge_check(ctx, n_sites));
}

TEST_CASE("full numeric suite") {
  const VerificationReport rep = verify_numeric(NumericConfig{});
  require_all_pass(rep);
  CHECK(rep.checks().size() > 100);
}
