#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include <Eigen/Dense>

#include "xyzpoly/eigen.hpp"
#include "xyzpoly/errors.hpp"
#include "xyzpoly/factor.hpp"
#include "xyzpoly/poly_json.hpp"
#include "xyzpoly/tau.hpp"

namespace xyzpoly {

UniPoly clear_inverse_square(const UniPoly& p, int e) {
  std::vector<BigRat> c(static_cast<size_t>(e) + 1);
  for (int j = 0; j <= p.degree(); ++j) {
    const int power = e - 2 * j;
    if (power < 0) {
      if (p.coeff(j) == 0) continue;
      throw Error(ErrorCode::InvalidArgument, "zeta^" + std::to_string(e) + " does not clear degree " +
                                                  std::to_string(p.degree()));
    }
    c[static_cast<size_t>(power)] = p.coeff(j);
  }
  return UniPoly(std::move(c), "zeta");
}

namespace {

std::string tag(const char* what, int n_sites) {
  return std::string(what) + "[N=" + std::to_string(n_sites) + "]";
}

Outcome identity(const UniPoly& lhs, const UniPoly& rhs, std::string detail = {}) {
  const UniPoly diff = lhs - rhs;
  return Outcome{diff.is_zero(), std::move(detail), diff.is_zero() ? nlohmann::json() : to_json(diff)};
}

// (zeta^2+3)-scaled shifted Hamiltonian applied to a configuration at a
// rational zeta, for any down-spin parity.
BigRat apply_scaled(uint32_t c, int n, const BigRat& zeta, const std::function<BigRat(uint32_t)>& v) {
  BigRat acc = 0;
  for (const auto& [target, coeff] : scaled_operator_row(c, n)) acc += coeff(zeta) * v(target);
  return acc;
}

}  // namespace

UniPoly conjectured_norm(int m) {
  RecurrenceFamily& s = cached_s_family();
  const UniPoly prod = s.at(m) * s.at(-m - 1);
  return clear_inverse_square(prod, m * (m + 1)) * pow(make_rat(4, 3), m);
}

VerificationReport verify_ground_vector(const GroundStateVector& psi) {
  VerificationReport rep;
  const int n_sites = psi.n_sites;
  const SpinSector& sector = *psi.sector;
  rep.run(tag("eigen.resubstitution", n_sites), [&] {
    for (uint32_t c : sector.configs()) {
      UniPoly acc({}, "zeta");
      for (const auto& [target, coeff] : scaled_operator_row(c, n_sites)) {
        acc += coeff * psi.components[static_cast<size_t>(sector.orbit_of(target))];
      }
      if (!acc.is_zero()) {
        return Outcome{false, "row " + config_string(c, n_sites), to_json(acc)};
      }
    }
    return Outcome{true, std::to_string(sector.configs().size()) + " rows, max degree " +
                             std::to_string(psi.max_degree),
                   {}};
  });
  rep.run(tag("eigen.integer_components", n_sites), [&] {
    for (size_t o = 0; o < psi.components.size(); ++o) {
      if (!has_integer_coeffs(psi.components[o])) {
        return Outcome{false, config_string(sector.representatives()[o], n_sites),
                       to_json(psi.components[o])};
      }
    }
    return Outcome{true, "", {}};
  });
  rep.run(tag("eigen.no_common_factor", n_sites), [&] {
    UniPoly g;
    BigInt content = 0;
    for (const auto& c : psi.components) {
      g = gcd(g, c);
      for (const auto& v : c.coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num_mpz_t());
    }
    return Outcome{g.degree() == 0 && content == 1, "gcd " + to_string(g) + ", content " + content.get_str(), {}};
  });
  rep.run(tag("eigen.normalization", n_sites), [&] {
    const BigRat v = psi.component(normalization_config(n_sites)).coeff(0);
    return Outcome{v == 1, normalization_config(n_sites) + " at zeta=0 is " + v.get_str(), {}};
  });
  rep.run(tag("eigen.odd_components_nonzero", n_sites), [&] {
    for (size_t o = 0; o < psi.components.size(); ++o) {
      if (psi.components[o].is_zero()) {
        return Outcome{false, config_string(sector.representatives()[o], n_sites), {}};
      }
    }
    return Outcome{true, std::to_string(psi.components.size()) + " orbits", {}};
  });
  return rep;
}

VerificationReport verify_conjecture_1(int n_sites) {
  VerificationReport rep;
  const int n = (n_sites - 1) / 2;
  rep.run(tag("conj1.norm", n_sites), [&] {
    const UniPoly norm = cached_ground_vector(n_sites).norm_squared();
    return identity(norm, conjectured_norm(n), "deg " + std::to_string(norm.degree()));
  });
  rep.run(tag("conj1.norm_degree", n_sites), [&] {
    const int d = cached_ground_vector(n_sites).norm_squared().degree();
    return Outcome{d == n * (n + 1), "deg |Psi|^2 = " + std::to_string(d), {}};
  });
  return rep;
}

VerificationReport verify_conjectures_2_3_4(int n_sites) {
  VerificationReport rep;
  const int n = (n_sites - 1) / 2;
  rep.run(tag("conj2.one_down", n_sites), [&] {
    const UniPoly sbar = sbar_sequence(n)[static_cast<size_t>(n)];
    const UniPoly rhs = clear_inverse_square(sbar, n * (n - 1) / 2) * make_rat(1, n_sites);
    return identity(cached_ground_vector(n_sites).component(std::string(static_cast<size_t>(n_sites - 1), '0') + "1"),
                    rhs);
  });
  rep.run(tag("conj3.all_down", n_sites), [&] {
    const UniPoly rhs = clear_inverse_square(cached_s_family().at(n), n * (n + 1) / 2);
    return identity(cached_ground_vector(n_sites).component(std::string(static_cast<size_t>(n_sites), '1')), rhs);
  });
  rep.run(tag("conj4.alternating", n_sites), [&] {
    const std::string cfg = alternating_config(n_sites);
    return identity(cached_ground_vector(n_sites).component(cfg), alt_polynomial(n), cfg);
  });
  return rep;
}

VerificationReport verify_symmetries(int n_sites) {
  VerificationReport rep;
  const int n = (n_sites - 1) / 2;
  const int w = n * (n + 1) / 2;
  rep.run(tag("sym.norm_reflection", n_sites), [&] {
    const UniPoly g = cached_ground_vector(n_sites).norm_squared();
    return identity(reflect(g), g, "zeta -> -zeta");
  });
  rep.run(tag("sym.norm_mobius", n_sites), [&] {
    // (zeta-1)^(2w) G((zeta+3)/(zeta-1)) = 4^w G(zeta) is the invariance of
    // G / (zeta^2+3)^w under zeta -> (zeta+3)/(zeta-1).
    const UniPoly g = cached_ground_vector(n_sites).norm_squared();
    return identity(mobius_substitute(g, MobiusMap{1, 3, 1, -1}, 2 * w), g * pow(BigRat(4), w),
                    "zeta -> (zeta+3)/(zeta-1)");
  });
  rep.run(tag("sym.spin_reversal_partner", n_sites), [&] {
    const GroundStateVector& psi = cached_ground_vector(n_sites);
    const uint32_t all = (1u << n_sites) - 1;
    for (const BigRat& z : {make_rat(2, 3), make_rat(-5, 7), BigRat(3)}) {
      std::vector<BigRat> values(psi.components.size());
      for (size_t o = 0; o < values.size(); ++o) values[o] = psi.components[o](z);
      // (R Psi)(c) = Psi(c with every spin reversed); R Psi lives in the even sector.
      auto r_psi = [&](uint32_t c) -> BigRat {
        const int o = psi.sector->orbit_of(c ^ all);
        return o < 0 ? BigRat(0) : values[static_cast<size_t>(o)];
      };
      for (uint32_t c = 0; c <= all; ++c) {
        const BigRat v = r_psi(c);
        if (v != 0 && std::popcount(c) % 2 != 0) {
          return Outcome{false, "R Psi has an odd component at zeta=" + z.get_str(), {}};
        }
        if (std::popcount(c) % 2 == 0 && apply_scaled(c, n_sites, z, r_psi) != 0) {
          return Outcome{false, "(H + N/2) R Psi != 0 at zeta=" + z.get_str() + ", row " +
                                    config_string(c, n_sites),
                         {}};
        }
      }
    }
    return Outcome{true, "S R Psi = +R Psi and H R Psi = -(N/2) R Psi at 3 points", {}};
  });
  rep.run(tag("sym.rs_anticommute", n_sites), [&] {
    std::mt19937_64 rng(static_cast<uint64_t>(n_sites));
    const uint32_t dim = 1u << n_sites, all = dim - 1;
    std::vector<long> v(dim);
    for (auto& x : v) x = static_cast<long>(rng() % 2001) - 1000;
    // (R v)(c) = v(c ^ all), (S v)(c) = (-1)^popcount(c) v(c)
    auto sign = [](uint32_t c) { return std::popcount(c) % 2 == 0 ? 1L : -1L; };
    const long parity = n_sites % 2 == 0 ? 1 : -1;
    for (uint32_t c = 0; c < dim; ++c) {
      const long rs = sign(c ^ all) * v[c ^ all];
      const long sr = sign(c) * v[c ^ all];
      if (rs != parity * sr) return Outcome{false, "mismatch at " + config_string(c, n_sites), {}};
    }
    return Outcome{true, "RS = (-1)^N SR on a random vector", {}};
  });
  rep.run(tag("sym.index_reflection", n_sites), [&] {
    const UniPoly a = conjectured_norm(n), b = conjectured_norm(-n - 1);
    const BigRat scalar = a.leading() / b.leading();
    const bool ok = a == b * scalar;
    return Outcome{ok, "formula(n) / formula(-n-1) = " + scalar.get_str(), {}};
  });
  return rep;
}

namespace {

// Sparse float Hamiltonian on the odd sector.
struct FloatH {
  std::vector<uint32_t> configs;
  std::vector<std::vector<std::pair<uint32_t, double>>> rows;
};

FloatH float_hamiltonian(int n, double zeta) {
  const double den = zeta * zeta + 3;
  const double jx = 2 * (1 + zeta) / den, jy = 2 * (1 - zeta) / den, jz = (zeta * zeta - 1) / den;
  FloatH h;
  const SpinSector sector(n);
  h.configs = sector.configs();
  std::vector<uint32_t> index(1u << n, 0);
  for (size_t i = 0; i < h.configs.size(); ++i) index[h.configs[i]] = static_cast<uint32_t>(i);
  for (uint32_t c : h.configs) {
    std::vector<std::pair<uint32_t, double>> row;
    double diag = 0;
    for (int a = 0; a < n; ++a) {
      const int b = (a + 1) % n;
      const bool equal = ((c >> a) & 1u) == ((c >> b) & 1u);
      diag += equal ? -jz / 2 : jz / 2;
      row.emplace_back(index[c ^ (1u << a) ^ (1u << b)], equal ? -(jx - jy) / 2 : -(jx + jy) / 2);
    }
    row.emplace_back(index[c], diag);
    h.rows.push_back(std::move(row));
  }
  return h;
}

Eigen::VectorXd apply(const FloatH& h, const Eigen::VectorXd& v) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
  for (size_t i = 0; i < h.rows.size(); ++i) {
    double acc = 0;
    for (const auto& [j, x] : h.rows[i]) acc += x * v[j];
    out[static_cast<Eigen::Index>(i)] = acc;
  }
  return out;
}

// Lanczos with full reorthogonalization. Stops once the lowest Ritz pair
// has residual |H y - theta y| = beta_m |s_m| below 1e-11.
double lanczos_min(const FloatH& h, uint64_t seed) {
  const Eigen::Index dim = static_cast<Eigen::Index>(h.rows.size());
  const Eigen::Index kmax = std::min<Eigen::Index>(dim, 400);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd q(dim, kmax);
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = gauss(rng);
  q.col(0) = v.normalized();
  std::vector<double> alpha, beta;
  double lowest = 0;
  for (Eigen::Index k = 0; k < kmax; ++k) {
    Eigen::VectorXd w = apply(h, q.col(k));
    alpha.push_back(q.col(k).dot(w));
    for (int pass = 0; pass < 2; ++pass) {
      w -= q.leftCols(k + 1) * (q.leftCols(k + 1).transpose() * w);
    }
    const double b = w.norm();
    const Eigen::Index m = k + 1;
    if (m % 10 == 0 || b < 1e-12 || m == kmax) {
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
      for (Eigen::Index i = 0; i < m; ++i) {
        t(i, i) = alpha[static_cast<size_t>(i)];
        if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[static_cast<size_t>(i)];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
      lowest = es.eigenvalues()[0];
      const double residual = b * std::abs(es.eigenvectors()(m - 1, 0));
      if (residual < 1e-11 || b < 1e-12) return lowest;
    }
    beta.push_back(b);
    if (k + 1 < kmax) q.col(k + 1) = w / b;
  }
  return lowest;
}

}  // namespace

double min_eigenvalue_float(int n_sites, double zeta) {
  const FloatH h = float_hamiltonian(n_sites, zeta);
  if (n_sites <= 9) {
    const Eigen::Index dim = static_cast<Eigen::Index>(h.rows.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (const auto& [j, x] : h.rows[static_cast<size_t>(i)]) m(i, j) += x;
    }
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m, Eigen::EigenvaluesOnly).eigenvalues()[0];
  }
  return lanczos_min(h, 0x1a2b3c + static_cast<uint64_t>(n_sites));
}

VerificationReport float_spectrum_check(int n_sites, int samples, uint64_t seed) {
  VerificationReport rep;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    // Rational zeta = p/97 in (-2, 2).
    const long p = static_cast<long>(rng() % 387) - 193;
    const double zeta = static_cast<double>(p) / 97.0;
    rep.run("float.ground_energy[N=" + std::to_string(n_sites) + ",zeta=" + std::to_string(p) + "/97]", [&] {
      const double e = min_eigenvalue_float(n_sites, zeta);
      const double err = std::abs(e + n_sites / 2.0);
      char buf[64];
      std::snprintf(buf, sizeof buf, "E_min + N/2 = %.3e", e + n_sites / 2.0);
      return Outcome{err < 1e-9, buf, err};
    });
  }
  return rep;
}

}  // namespace xyzpoly
