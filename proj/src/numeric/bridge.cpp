#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>
#include <tuple>

#include <Eigen/Dense>

#include "xyzpoly/eigen.hpp"
#include "xyzpoly/errors.hpp"
#include "xyzpoly/numeric.hpp"
#include "xyzpoly/qpoly.hpp"

namespace xyzpoly {

namespace {

constexpr double kPi = std::numbers::pi;

using Term = std::tuple<int, int, double>;

// P_n as (x power, z power, coefficient) in doubles.
const std::vector<Term>& float_terms(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Term>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Term> terms;
    for (const auto& [e, c] : qpoly(n).poly.terms()) terms.emplace_back(e.first, e.second, c.get_d());
    it = cache.emplace(n, std::move(terms)).first;
  }
  return it->second;
}

cplx eval_terms(const std::vector<Term>& terms, cplx x, cplx z) {
  cplx acc = 0;
  for (const auto& [i, j, c] : terms) acc += c * std::pow(x, i) * std::pow(z, j);
  return acc;
}

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel(cplx lhs, cplx rhs) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

}  // namespace

cplx q1_value(const EllipticContext& ctx, int n, cplx u) {
  const cplx h = std::sqrt(ctx.q);
  const VariableMaps m = variable_maps(ctx, u);
  return theta(3, u / 2.0, h) * std::pow(theta(4, u / 2.0, h), 2 * n) * eval_terms(float_terms(n), m.x, m.z);
}

cplx q2_value(const EllipticContext& ctx, int n, cplx u) {
  return (n % 2 == 0 ? 1.0 : -1.0) * q1_value(ctx, n, u + kPi);
}

cplx q_plus(const EllipticContext& ctx, int n, cplx u) { return q1_value(ctx, n, u) + q2_value(ctx, n, u); }
cplx q_minus(const EllipticContext& ctx, int n, cplx u) { return q1_value(ctx, n, u) - q2_value(ctx, n, u); }

double tq_residual(const EllipticContext& ctx, int n, const std::vector<cplx>& us) {
  const int big_n = 2 * n + 1;
  double worst = 0;
  for (const cplx u : us) {
    for (int which = 0; which < 2; ++which) {
      cplx sum = 0;
      double largest = 0;
      for (int j = 0; j < 3; ++j) {
        const cplx v = u + 2.0 * kPi * j / 3.0;
        const cplx q = which == 0 ? q1_value(ctx, n, v) : q2_value(ctx, n, v);
        const cplx term = std::pow(theta(1, v, ctx.q), big_n) * q;
        sum += term;
        largest = std::max(largest, std::abs(term));
      }
      worst = std::max(worst, std::abs(sum) / largest);
    }
  }
  return worst;
}

std::vector<NamedResidual> tq_residuals(const EllipticContext& ctx, int n, const std::vector<cplx>& us) {
  const int big_n = 2 * n + 1;
  const double sign_n = n % 2 == 0 ? 1.0 : -1.0;
  const cplx pt = ctx.pi_tau();
  double per_pi = 0, per_tau = 0, even = 0;
  for (const cplx u : us) {
    const cplx qp = q_plus(ctx, n, u), qm = q_minus(ctx, n, u);
    per_pi = std::max({per_pi, rel(q_plus(ctx, n, u + kPi), sign_n * qp), rel(q_minus(ctx, n, u + kPi), -sign_n * qm)});
    // Q_+-(u + pi tau) = q^{-N/2} e^{-iNu} Q_-+(u)
    const cplx factor = std::exp(-0.5 * big_n * std::log(ctx.q) - cplx(0, 1) * double(big_n) * u);
    per_tau = std::max({per_tau, rel(q_plus(ctx, n, u + pt), factor * qm), rel(q_minus(ctx, n, u + pt), factor * qp)});
    even = std::max(even, rel(q_plus(ctx, n, -u), qp));
  }
  return {{"tq.residual", tq_residual(ctx, n, us)},
          {"qper.pi", per_pi},
          {"qper.tau", per_tau},
          {"qper.even", even}};
}

VerificationReport check_tq(const EllipticContext& ctx, int n, const std::vector<cplx>& us, double tol) {
  return threshold_report(tq_residuals(ctx, n, us), tol);
}

namespace {

using CMat = Eigen::MatrixXcd;

// Row-to-row transfer matrix T[out][in] = tr prod_j R(aux, in_j -> aux', out_j).
CMat transfer_matrix(const WeightSet& w, int n_sites) {
  // R indexed by (aux_in * 2 + site_in, aux_out * 2 + site_out).
  cplx r[4][4] = {};
  r[0][0] = r[3][3] = w.a;
  r[1][1] = r[2][2] = w.b;
  r[1][2] = r[2][1] = w.c;
  r[0][3] = r[3][0] = w.d;
  const Eigen::Index dim = Eigen::Index(1) << n_sites;
  CMat t = CMat::Zero(dim, dim);
  for (Eigen::Index in = 0; in < dim; ++in) {
    for (Eigen::Index out = 0; out < dim; ++out) {
      cplx total = 0;
      for (int a0 = 0; a0 < 2; ++a0) {
        cplx vec[2] = {0, 0};
        vec[a0] = 1;
        for (int j = 0; j < n_sites; ++j) {
          const int si = static_cast<int>((in >> j) & 1), so = static_cast<int>((out >> j) & 1);
          cplx next[2] = {0, 0};
          for (int ai = 0; ai < 2; ++ai) {
            if (vec[ai] == cplx(0)) continue;
            for (int ao = 0; ao < 2; ++ao) next[ao] += vec[ai] * r[ai * 2 + si][ao * 2 + so];
          }
          vec[0] = next[0];
          vec[1] = next[1];
        }
        total += vec[a0];
      }
      t(out, in) = total;
    }
  }
  return t;
}

// Dense H on the full 2^N space; bit j of a basis index is site j+1, set for down.
CMat dense_hamiltonian(int n_sites, cplx zeta) {
  const cplx den = zeta * zeta + 3.0;
  const cplx jx = 2.0 * (1.0 + zeta) / den, jy = 2.0 * (1.0 - zeta) / den, jz = (zeta * zeta - 1.0) / den;
  const Eigen::Index dim = Eigen::Index(1) << n_sites;
  CMat h = CMat::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    for (int j = 0; j < n_sites; ++j) {
      const int k = (j + 1) % n_sites;
      const bool equal = ((b >> j) & 1) == ((b >> k) & 1);
      // sigma_y sigma_y contributes -1 on equal spins, +1 on unequal ones.
      const Eigen::Index flipped = b ^ (Eigen::Index(1) << j) ^ (Eigen::Index(1) << k);
      h(flipped, b) += -0.5 * (equal ? jx - jy : jx + jy);
      h(b, b) += -0.5 * jz * (equal ? 1.0 : -1.0);
    }
  }
  return h;
}

double nearest(const Eigen::VectorXcd& ev, cplx target) {
  double best = INFINITY;
  for (Eigen::Index i = 0; i < ev.size(); ++i) best = std::min(best, std::abs(ev(i) - target));
  return best;
}

}  // namespace

VerificationReport transfer_spectrum_check(const EllipticContext& ctx, cplx u, int n_sites, double tol) {
  VerificationReport rep;
  const std::string tag = "[N=" + std::to_string(n_sites) + "]";
  rep.run("transfer.eigenvalue" + tag, [&] {
    const WeightSet w = weights(ctx, u);
    const cplx target = std::pow(w.a + w.b, n_sites);
    Eigen::ComplexEigenSolver<CMat> es(transfer_matrix(w, n_sites), false);
    const double d = nearest(es.eigenvalues(), target) / std::abs(target);
    return Outcome{d < tol, fmt("nearest eigenvalue at relative distance %.3e", d), d < tol ? nlohmann::json() : nlohmann::json(d)};
  });
  const cplx zeta = variable_maps(ctx, u).zeta;
  const CMat h = dense_hamiltonian(n_sites, zeta);
  const Eigen::Index dim = h.rows();
  rep.run("hamiltonian.commutes_S" + tag, [&] {
    Eigen::VectorXcd s(dim);
    for (Eigen::Index b = 0; b < dim; ++b) s(b) = std::popcount(static_cast<uint64_t>(b)) % 2 == 0 ? 1.0 : -1.0;
    const CMat c = h * s.asDiagonal() - s.asDiagonal() * h;
    const double r = c.norm() / h.norm();
    return Outcome{r < tol, fmt("relative commutator norm %.3e", r), {}};
  });
  rep.run("hamiltonian.commutes_R" + tag, [&] {
    CMat rm = CMat::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) rm(b ^ (dim - 1), b) = 1.0;
    const double r = (h * rm - rm * h).norm() / h.norm();
    return Outcome{r < tol, fmt("relative commutator norm %.3e", r), {}};
  });
  rep.run("hamiltonian.ground" + tag, [&] {
    Eigen::ComplexEigenSolver<CMat> es(h, false);
    const double d = nearest(es.eigenvalues(), -0.5 * n_sites);
    return Outcome{d < tol, fmt("nearest eigenvalue at distance %.3e from -N/2", d), d < tol ? nlohmann::json() : nlohmann::json(d)};
  });
  return rep;
}

namespace {

cplx phi_lame(double q, int n, double u, bool plus) {
  const EllipticContext ctx(q);
  const cplx qv = plus ? q_plus(ctx, n, u) : q_minus(ctx, n, u);
  return std::pow(theta(1, u, q), 2 * n + 1) / std::pow(theta(1, 3 * u, q * q * q), n) * qv;
}

// Central difference refined once by Richardson extrapolation.
template <class F>
cplx d1(F f, double x, double h) {
  const auto c = [&](double s) { return (f(x + s) - f(x - s)) / (2 * s); };
  return (4.0 * c(h / 2) - c(h)) / 3.0;
}

template <class F>
cplx d2(F f, double x, double h) {
  const cplx fx = f(x);
  const auto c = [&](double s) { return (f(x + s) - 2.0 * fx + f(x - s)) / (s * s); };
  return (4.0 * c(h / 2) - c(h)) / 3.0;
}

}  // namespace

VerificationReport lame_residual_check(double q, int n, const std::vector<double>& us, double tol) {
  VerificationReport rep;
  for (const bool plus : {true, false}) {
    const std::string id = std::string("lame.") + (plus ? "plus" : "minus") + "[n=" + std::to_string(n) +
                           ",q=" + fmt("%g", q) + "]";
    rep.run(
        id,
        [&] {
          std::vector<cplx> lhs, phi;
          for (const double u : us) {
            const auto in_q = [&](double qq) { return phi_lame(qq, n, u, plus); };
            const auto in_u = [&](double uu) { return phi_lame(q, n, uu, plus); };
            const cplx f = phi_lame(q, n, u, plus);
            const cplx wp = weierstrass_p(3 * u, q * q * q);
            lhs.push_back(6 * q * d1(in_q, q, 1e-2 * q) + d2(in_u, u, 1e-2) - 9.0 * n * (n + 1) * wp * f);
            phi.push_back(f);
          }
          cplx num = 0;
          double den = 0;
          for (size_t i = 0; i < phi.size(); ++i) {
            num += std::conj(phi[i]) * lhs[i];
            den += std::norm(phi[i]);
          }
          const cplx c = num / den;
          double worst = 0, scale = 0;
          for (size_t i = 0; i < phi.size(); ++i) {
            worst = std::max(worst, std::abs(lhs[i] - c * phi[i]));
            scale = std::max(scale, std::abs(lhs[i]));
          }
          const double r = worst / scale;
          return Outcome{r < tol, "c = " + fmt("%.10g", c.real()) + ", post-fit residual " + fmt("%.3e", r),
                         nlohmann::json{{"c", c.real()}, {"residual", r}}};
        },
        true);
  }
  return rep;
}

VerificationReport norm_bridge_check(const EllipticContext& ctx, int n_sites, double tol) {
  VerificationReport rep;
  rep.run("norm_bridge[N=" + std::to_string(n_sites) + "]", [&] {
    const cplx zc = variable_maps(ctx, 0.0).zeta;
    if (std::abs(zc.imag()) > 1e-12 * std::abs(zc)) return Outcome{false, "zeta is not real at this nome", {}};
    const double zeta = zc.real();
    const SpinSector sector(n_sites);
    const auto& configs = sector.configs();
    std::map<uint32_t, Eigen::Index> index;
    for (size_t i = 0; i < configs.size(); ++i) index[configs[i]] = static_cast<Eigen::Index>(i);
    const Eigen::Index dim = static_cast<Eigen::Index>(configs.size());
    // K = 2(zeta^2+3)(H + N/2) is real symmetric for real zeta; Psi spans its kernel.
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(dim, dim);
    const auto eval = [zeta](const UniPoly& p) {
      double acc = 0;
      for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * zeta + it->get_d();
      return acc;
    };
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (const auto& [target, coeff] : scaled_operator_row(configs[static_cast<size_t>(i)], n_sites)) {
        k(index.at(target), i) += eval(coeff);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k);
    Eigen::Index best = 0;
    es.eigenvalues().cwiseAbs().minCoeff(&best);
    Eigen::VectorXd v = es.eigenvectors().col(best);

    const std::string ref = normalization_config(n_sites);
    const double exact_ref = eval(cached_ground_vector(n_sites).component(ref));
    v *= exact_ref / v(index.at(parse_config(ref)));
    const double float_norm = v.squaredNorm();
    const double formula = eval(conjectured_norm((n_sites - 1) / 2));
    const double r = std::abs(float_norm - formula) / std::abs(formula);
    return Outcome{r < tol, "zeta = " + fmt("%.12g", zeta) + ", relative difference " + fmt("%.3e", r),
                   r < tol ? nlohmann::json() : nlohmann::json(r)};
  });
  return rep;
}

std::vector<cplx> sample_u(const EllipticContext& ctx, int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(0.1, kPi - 0.1), im(-0.25, 0.25);
  // The apparent pole of the reconstruction and the zeros of the weights.
  const std::vector<cplx> avoid = {kPi + ctx.pi_tau() / 2.0, ctx.eta, kPi - ctx.eta};
  std::vector<cplx> out;
  while (static_cast<int>(out.size()) < count) {
    const cplx u(re(rng), im(rng));
    bool ok = true;
    for (const cplx a : avoid) ok = ok && std::abs(u - a) >= 0.05;
    if (ok) out.push_back(u);
  }
  return out;
}

namespace {

// One check per residual id: the worst value over all samples.
void add_worst(VerificationReport& rep, const std::vector<std::vector<NamedResidual>>& per_sample,
               const std::string& suffix, double tol) {
  std::vector<NamedResidual> worst;
  for (const auto& sample : per_sample) {
    for (size_t i = 0; i < sample.size(); ++i) {
      if (worst.size() <= i) worst.push_back({sample[i].id + suffix, 0});
      worst[i].value = std::max(worst[i].value, sample[i].value);
    }
  }
  rep.append(threshold_report(worst, tol));
}

}  // namespace

VerificationReport verify_numeric(const NumericConfig& config) {
  VerificationReport rep;
  for (size_t iq = 0; iq < config.nomes.size(); ++iq) {
    const double q = config.nomes[iq];
    const std::string qtag = "[q=" + fmt("%g", q) + "]";
    std::unique_ptr<EllipticContext> ctx;
    try {
      ctx = std::make_unique<EllipticContext>(q);
    } catch (const Error& e) {
      rep.add(CheckResult{"nome" + qtag, CheckStatus::Fail, e.what(), {}, 0});
      continue;
    }
    const std::vector<cplx> us = sample_u(*ctx, config.samples, config.seed + iq);
    std::vector<std::vector<NamedResidual>> theta_r, map_r;
    for (const cplx u : us) {
      theta_r.push_back(theta_identity_residuals(*ctx, u));
      map_r.push_back(variable_map_residuals(*ctx, u));
    }
    add_worst(rep, theta_r, qtag, 1e-12);
    add_worst(rep, map_r, qtag, 1e-10);
    for (int n = 0; n <= config.tq_n_max; ++n) {
      const std::string sfx = "[n=" + std::to_string(n) + ",q=" + fmt("%g", q) + "]";
      std::vector<NamedResidual> r;
      try {
        r = tq_residuals(*ctx, n, us);
      } catch (const std::exception& e) {
        rep.add(CheckResult{"tq" + sfx, CheckStatus::Fail, e.what(), {}, 0});
        continue;
      }
      for (auto& x : r) x.id += sfx;
      rep.append(threshold_report(r, 1e-10));
    }
    for (int n_sites : config.transfer_sizes) {
      VerificationReport t = transfer_spectrum_check(*ctx, config.u, n_sites);
      for (auto c : t.checks()) {
        c.id.insert(c.id.size() - 1, ",q=" + fmt("%g", q));
        rep.add(std::move(c));
      }
    }
    for (int n_sites : config.norm_sizes) {
      const VerificationReport t = norm_bridge_check(*ctx, n_sites);
      for (auto c : t.checks()) {
        c.id.insert(c.id.size() - 1, ",q=" + fmt("%g", q));
        rep.add(std::move(c));
      }
    }
    std::vector<double> lame_u;
    for (int i = 1; i <= 8; ++i) lame_u.push_back(0.05 + 0.1 * i);
    for (int n : config.lame_n) rep.append(lame_residual_check(q, n, lame_u));
  }
  return rep;
}

}  // namespace xyzpoly
