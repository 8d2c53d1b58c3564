#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "xyzpoly/report.hpp"

namespace xyzpoly {

using cplx = std::complex<double>;

/// Jacobi theta function k = 1..4 with periods pi and pi tau, q = e^{i pi tau},
/// or its deriv-th derivative in u (deriv <= 3). The series stops once a
/// term bound falls below 1e-18 times the larger of the partial sum and the
/// leading term. Fractional nome powers use the principal logarithm.
/// Throws NomeOutOfRange unless 0 < |q| < 1.
cplx theta(int k, cplx u, cplx q, int deriv = 0);

/// Weierstrass p-function with periods pi and pi tau, q = e^{i pi tau}.
cplx weierstrass_p(cplx v, cplx q);

/// Nome plus the crossing parameter eta = pi/3.
struct EllipticContext {
  cplx q;
  double eta;
  explicit EllipticContext(cplx nome);
  /// pi tau = -i log q
  cplx pi_tau() const;
};

struct WeightSet {
  cplx a, b, c, d;
};

/// Boltzmann weights in the theta parametrization with
/// rho = 2 / (theta_2(0|q) theta_4(0|q^2)).
WeightSet weights(const EllipticContext& ctx, cplx u);

struct VariableMaps {
  cplx zeta, gamma, x, z;
};

/// Theta-ratio forms of zeta, gamma, x and z = gamma^-2.
VariableMaps variable_maps(const EllipticContext& ctx, cplx u);
cplx x_of_u(const EllipticContext& ctx, cplx u);

struct NamedResidual {
  std::string id;
  double value;
};

/// One check per residual, passing when value < tol.
VerificationReport threshold_report(const std::vector<NamedResidual>& residuals, double tol);

std::vector<NamedResidual> theta_identity_residuals(const EllipticContext& ctx, cplx u);
std::vector<NamedResidual> variable_map_residuals(const EllipticContext& ctx, cplx u);

/// Theta quasi-periodicity and shift identities.
VerificationReport check_theta_identities(const EllipticContext& ctx, cplx u, double tol = 1e-12);

/// The weight constraint, zeta and gamma against the rational expressions in
/// (a, b, c, d), the zeta-gamma substitution and its involution, the
/// quadratic for x, and both relations for x(u +- pi/3).
VerificationReport check_variable_maps(const EllipticContext& ctx, cplx u, double tol = 1e-10);

/// Q_1 with unit normalization: theta_3(u/2|q^1/2) theta_4^{2n}(u/2|q^1/2) P_n(x, z).
cplx q1_value(const EllipticContext& ctx, int n, cplx u);
/// Q_2(u) = (-1)^n Q_1(u + pi).
cplx q2_value(const EllipticContext& ctx, int n, cplx u);
cplx q_plus(const EllipticContext& ctx, int n, cplx u);
cplx q_minus(const EllipticContext& ctx, int n, cplx u);

/// Max over the samples and over Q_1, Q_2 of |sum of the three TQ terms|
/// divided by the largest term.
double tq_residual(const EllipticContext& ctx, int n, const std::vector<cplx>& us);

/// TQ residual and the three periodicity conditions of Q_+- at the samples.
std::vector<NamedResidual> tq_residuals(const EllipticContext& ctx, int n, const std::vector<cplx>& us);

/// TQ residual plus the three periodicity conditions of Q_+-.
VerificationReport check_tq(const EllipticContext& ctx, int n, const std::vector<cplx>& us, double tol = 1e-10);

/// Dense row-to-row transfer matrix on 2^N states; (a+b)^N must be an
/// eigenvalue. The dense float Hamiltonian at the same zeta must commute with
/// S and R and contain -N/2.
VerificationReport transfer_spectrum_check(const EllipticContext& ctx, cplx u, int n_sites, double tol = 1e-9);

/// Fits c(q, n) in the non-stationary Lame equation for Phi_+- by least
/// squares on real u samples; q derivative by Richardson-refined central
/// differences. Failures are soft.
VerificationReport lame_residual_check(double q, int n, const std::vector<double>& us, double tol = 1e-4);

/// zeta from the theta form fed into the conjectured norm, against the float
/// norm of the float ground vector scaled to the exact reference component.
VerificationReport norm_bridge_check(const EllipticContext& ctx, int n_sites, double tol = 1e-8);

struct NumericConfig {
  std::vector<double> nomes = {0.05, 0.1, 0.2};
  int samples = 20;
  uint64_t seed = 20240607;
  int tq_n_max = 4;
  std::vector<int> transfer_sizes = {3, 5, 7};
  std::vector<int> lame_n = {0, 1};
  std::vector<int> norm_sizes = {3, 5};
  double u = 0.4;  // spectral parameter for the transfer matrix checks
};

/// Random samples with 0.1 <= Re u <= pi - 0.1, |Im u| <= 0.25, kept at
/// distance >= 0.05 from the apparent pole pi + pi tau / 2.
std::vector<cplx> sample_u(const EllipticContext& ctx, int count, uint64_t seed);

VerificationReport verify_numeric(const NumericConfig& config);

}  // namespace xyzpoly
