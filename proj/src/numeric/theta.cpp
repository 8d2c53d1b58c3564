#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "xyzpoly/errors.hpp"
#include "xyzpoly/numeric.hpp"

namespace xyzpoly {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTail = 1e-18;
constexpr int kMaxTerms = 400;

// d^deriv/du^deriv of sin(m u) (odd) or cos(m u). cos(mu) is the first
// derivative of sin(mu)/m, so both ride the same 4-cycle.
cplx trig_derivative(bool odd, double m, cplx u, int deriv) {
  const cplx s = std::sin(m * u), c = std::cos(m * u);
  cplx v;
  switch ((deriv + (odd ? 0 : 1)) % 4) {
    case 0: v = s; break;
    case 1: v = c; break;
    case 2: v = -s; break;
    default: v = -c; break;
  }
  return std::pow(m, deriv) * v;
}

void require_nome(cplx q) {
  const double a = std::abs(q);
  if (!(a > 0 && a < 1)) {
    throw Error(ErrorCode::NomeOutOfRange, "nome must satisfy 0 < |q| < 1, got |q| = " + std::to_string(a));
  }
}

}  // namespace

cplx theta(int k, cplx u, cplx q, int deriv) {
  require_nome(q);
  if (k < 1 || k > 4) throw Error(ErrorCode::InvalidArgument, "theta index must be 1..4");
  if (deriv < 0 || deriv > 3) throw Error(ErrorCode::InvalidArgument, "theta derivative order must be 0..3");
  const cplx lq = std::log(q);
  const double aq = std::abs(q);
  const double im = std::abs(u.imag());
  const bool half = k <= 2;  // exponents (n + 1/2)^2 and frequencies 2n + 1
  const bool odd = k == 1;
  cplx sum = (!half && deriv == 0) ? cplx(1) : cplx(0);
  double lead = 0;
  for (int n = half ? 0 : 1; n < kMaxTerms; ++n) {
    const double e = half ? (n + 0.5) * (n + 0.5) : double(n) * n;
    const double m = half ? 2.0 * n + 1 : 2.0 * n;
    const double sign = ((k == 1 || k == 4) && n % 2 == 1) ? -1.0 : 1.0;
    sum += 2.0 * sign * std::exp(e * lq) * trig_derivative(odd, m, u, deriv);
    const double bound = 2.0 * std::pow(aq, e) * std::pow(m, deriv) * std::cosh(m * im);
    if (n <= 1) lead = std::max(lead, bound);
    if (n >= 2 && bound < kTail * std::max(std::abs(sum), lead)) return sum;
  }
  throw Error(ErrorCode::TruncationFailure, "theta series did not converge within " + std::to_string(kMaxTerms) +
                                                " terms");
}

cplx weierstrass_p(cplx v, cplx q) {
  const cplx t0 = theta(1, v, q), t1 = theta(1, v, q, 1), t2 = theta(1, v, q, 2);
  const cplx log2 = (t2 * t0 - t1 * t1) / (t0 * t0);
  return -log2 + theta(1, 0.0, q, 3) / (3.0 * theta(1, 0.0, q, 1));
}

EllipticContext::EllipticContext(cplx nome) : q(nome), eta(kPi / 3) { require_nome(nome); }

cplx EllipticContext::pi_tau() const { return cplx(0, -1) * std::log(q); }

WeightSet weights(const EllipticContext& ctx, cplx u) {
  const cplx q2 = ctx.q * ctx.q;
  const double eta = ctx.eta;
  const cplx rho = 2.0 / (theta(2, 0.0, ctx.q) * theta(4, 0.0, q2));
  const cplx t4e = theta(4, 2 * eta, q2), t1e = theta(1, 2 * eta, q2);
  const cplx t4m = theta(4, u - eta, q2), t1m = theta(1, u - eta, q2);
  const cplx t4p = theta(4, u + eta, q2), t1p = theta(1, u + eta, q2);
  return WeightSet{rho * t4e * t4m * t1p, rho * t4e * t1m * t4p, rho * t1e * t4m * t4p, rho * t1e * t1m * t1p};
}

cplx x_of_u(const EllipticContext& ctx, cplx u) {
  const cplx h = std::sqrt(ctx.q);
  const cplx g = variable_maps(ctx, 0.0).gamma;
  const cplx r = theta(3, u / 2.0, h) / theta(4, u / 2.0, h);
  return g * r * r;
}

VariableMaps variable_maps(const EllipticContext& ctx, cplx u) {
  const cplx q2 = ctx.q * ctx.q;
  const cplx h = std::sqrt(ctx.q);
  const cplx zr = theta(1, 2 * kPi / 3, q2) / theta(4, 2 * kPi / 3, q2);
  const cplx gr = theta(1, kPi / 3, h) / theta(2, kPi / 3, h);
  VariableMaps m;
  m.zeta = zr * zr;
  m.gamma = -gr * gr;
  const cplx xr = theta(3, u / 2.0, h) / theta(4, u / 2.0, h);
  m.x = m.gamma * xr * xr;
  m.z = 1.0 / (m.gamma * m.gamma);
  return m;
}

namespace {

double rel(cplx lhs, cplx rhs) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

}  // namespace

VerificationReport threshold_report(const std::vector<NamedResidual>& residuals, double tol) {
  VerificationReport rep;
  for (const auto& r : residuals) {
    rep.run(r.id, [&] {
      char buf[64];
      std::snprintf(buf, sizeof buf, "relative residual %.3e", r.value);
      const bool ok = r.value < tol;
      return Outcome{ok, buf, ok ? nlohmann::json() : nlohmann::json(r.value)};
    });
  }
  return rep;
}

std::vector<NamedResidual> theta_identity_residuals(const EllipticContext& ctx, cplx u) {
  const cplx q = ctx.q;
  const cplx t = theta(1, u, q);
  return {
      {"theta.odd", (std::abs(theta(1, 0.0, q)) + std::abs(t + theta(1, -u, q))) / std::abs(t)},
      {"theta.quasi_period", std::abs(theta(1, u + kPi, q) + t) / std::abs(t)},
      {"theta.shift", rel(theta(4, u, q), theta(3, u + kPi / 2, q))},
  };
}

std::vector<NamedResidual> variable_map_residuals(const EllipticContext& ctx, cplx u) {
  const WeightSet w = weights(ctx, u);
  const VariableMaps m = variable_maps(ctx, u);
  const cplx a = w.a, b = w.b, c = w.c, d = w.d;
  std::vector<NamedResidual> out;

  const cplx lhs = (a * a + a * b) * (b * b + a * b), rhs = (c * c + a * b) * (d * d + a * b);
  const double ab = std::abs(a * b);
  const double scale = (std::norm(a) + ab) * (std::norm(b) + ab) + (std::norm(c) + ab) * (std::norm(d) + ab);
  out.push_back({"weights.constraint", std::abs(lhs - rhs) / scale});
  out.push_back({"weights.a_plus_b", rel(a + b, theta(1, u, ctx.q))});
  out.push_back({"maps.zeta", rel(m.zeta, c * d / (a * b))});

  const cplx g_weights = (a - b + c - d) * (a - b - c + d) / ((a + b + c + d) * (a + b - c - d));
  const cplx g_zeta = (m.zeta + 3.0) / (m.zeta - 1.0);
  out.push_back({"maps.gamma", std::max(rel(m.gamma, g_weights), rel(m.gamma, g_zeta))});
  out.push_back({"maps.involution", rel((g_zeta + 3.0) / (g_zeta - 1.0), m.zeta)});

  const cplx q_lhs = m.x - 2.0 * m.gamma + m.gamma * m.gamma / m.x;
  const cplx q_rhs = -16.0 * (a - b) * (a - b) * c * d / ((c + d) * (c + d) * (a + b + c + d) * (a + b - c - d));
  out.push_back({"maps.x_quadratic", rel(q_lhs, q_rhs)});

  const cplx xp = x_of_u(ctx, u + kPi / 3), xm = x_of_u(ctx, u - kPi / 3);
  const cplx g2 = m.gamma * m.gamma;
  out.push_back({"maps.x_shift", std::max(rel(xp, g2 / x_of_u(ctx, u - 2 * kPi / 3)),
                                          rel(xm, g2 / x_of_u(ctx, u + 2 * kPi / 3)))});

  const cplx x = m.x, z = m.z;
  const cplx den = (x * z - 1.0) * (x * z - 1.0);
  const cplx prod = (x - 1.0) * (x - 1.0) / den;
  const cplx sum = (2.0 * z * (x * x * z + 1.0) - x * (z * z + 4.0 * z - 1.0)) / (z * den);
  out.push_back({"maps.x_pm_relations", std::max(rel(xp * xm, prod), rel(xp + xm, sum))});
  return out;
}

VerificationReport check_theta_identities(const EllipticContext& ctx, cplx u, double tol) {
  return threshold_report(theta_identity_residuals(ctx, u), tol);
}

VerificationReport check_variable_maps(const EllipticContext& ctx, cplx u, double tol) {
  return threshold_report(variable_map_residuals(ctx, u), tol);
}

}  // namespace xyzpoly
