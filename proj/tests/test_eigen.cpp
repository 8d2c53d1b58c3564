#include <doctest.h>

#include <bit>
#include <complex>

#include <Eigen/Dense>

#include "xyzpoly/eigen.hpp"
#include "xyzpoly/errors.hpp"

using namespace xyzpoly;

namespace {

void require_all_pass(const VerificationReport& rep) {
  for (const auto& c : rep.checks()) {
    INFO(c.id << ": " << c.detail << " " << c.residual.dump());
    CHECK(c.status == CheckStatus::Pass);
  }
}

using CMat = Eigen::MatrixXcd;

// Independent construction: Kronecker products of Pauli matrices on the
// full 2^N space. Basis index bit i is site i+1, set for spin down.
CMat dense_xyz(int n, double zeta) {
  const double den = zeta * zeta + 3;
  const double j[3] = {2 * (1 + zeta) / den, 2 * (1 - zeta) / den, (zeta * zeta - 1) / den};
  using C = std::complex<double>;
  CMat pauli[3] = {CMat::Zero(2, 2), CMat::Zero(2, 2), CMat::Zero(2, 2)};
  pauli[0] << 0, 1, 1, 0;
  pauli[1] << 0, C(0, -1), C(0, 1), 0;
  pauli[2] << 1, 0, 0, -1;
  const Eigen::Index dim = Eigen::Index(1) << n;
  CMat h = CMat::Zero(dim, dim);
  for (int site = 0; site < n; ++site) {
    const int next = (site + 1) % n;
    for (int a = 0; a < 3; ++a) {
      // op acts on basis index b through the bits of `site` and `next`.
      for (Eigen::Index b = 0; b < dim; ++b) {
        const int s1 = static_cast<int>((b >> site) & 1), s2 = static_cast<int>((b >> next) & 1);
        for (int t1 = 0; t1 < 2; ++t1) {
          for (int t2 = 0; t2 < 2; ++t2) {
            const C amp = pauli[a](t1, s1) * pauli[a](t2, s2);
            if (amp == C(0)) continue;
            Eigen::Index target = b & ~((Eigen::Index(1) << site) | (Eigen::Index(1) << next));
            target |= (Eigen::Index(t1) << site) | (Eigen::Index(t2) << next);
            h(target, b) += -0.5 * j[a] * amp;
          }
        }
      }
    }
  }
  return h;
}

}  // namespace

TEST_CASE("couplings satisfy both identities") {
  const CouplingSet j = couplings(make_rat(5, 7));
  CHECK(j.jx + j.jy + j.jz == 1);
  require_all_pass(check_couplings({make_rat(5, 7), BigRat(0), BigRat(-3), make_rat(1, 9)}));
}

TEST_CASE("sector layout and orbits") {
  CHECK_THROWS_AS(SpinSector(4), Error);
  CHECK_THROWS_AS(SpinSector(1), Error);
  for (int n : {3, 5, 7, 9}) {
    const SpinSector s(n);
    CHECK(s.configs().size() == (size_t(1) << (n - 1)));
    size_t total = 0;
    for (size_t o = 0; o < s.orbit_count(); ++o) total += static_cast<size_t>(s.orbit_size(o));
    CHECK(total == s.configs().size());
    for (uint32_t c : s.configs()) {
      const uint32_t rep = s.representatives()[static_cast<size_t>(s.orbit_of(c))];
      CHECK(SpinSector::canonical(c, n) == rep);
      CHECK(config_string(rep, n) <= config_string(c, n));
      CHECK(std::popcount(c) % 2 == 1);
    }
  }
  CHECK(parse_config(config_string(0b10110, 5)) == 0b10110u);
  CHECK(normalization_config(3) == "001");
  CHECK(normalization_config(5) == "00111");
  CHECK(alternating_config(7) == "0010101");
  CHECK(alternating_config(9) == "010101011");
}

TEST_CASE("exact Hamiltonian agrees with a dense Pauli construction") {
  for (int n : {3, 5}) {
    const double zeta = 0.37;
    const CMat dense = dense_xyz(n, zeta);
    const SparseExactMatrix h = build_hamiltonian(n, make_rat(37, 100));
    for (size_t i = 0; i < h.configs.size(); ++i) {
      std::vector<double> row(h.configs.size(), 0.0);
      for (const auto& [j, v] : h.rows[i]) row[j] = v.get_d();
      for (size_t j = 0; j < h.configs.size(); ++j) {
        const std::complex<double> d = dense(h.configs[i], h.configs[j]);
        CHECK(std::abs(d.imag()) < 1e-14);
        CHECK(std::abs(d.real() - row[j]) < 1e-14);
      }
    }
    // Trace over the sector is -(Jz/2) times the summed bond signs.
    BigRat trace = 0;
    for (size_t i = 0; i < h.rows.size(); ++i) {
      for (const auto& [j, v] : h.rows[i]) if (j == i) trace += v;
    }
    double expect = 0;
    for (uint32_t c : h.configs) {
      for (int a = 0; a < n; ++a) expect += (((c >> a) & 1u) == ((c >> ((a + 1) % n)) & 1u)) ? 1 : -1;
    }
    expect *= -0.5 * (zeta * zeta - 1) / (zeta * zeta + 3);
    CHECK(std::abs(trace.get_d() - expect) < 1e-12);
  }
}

TEST_CASE("N = 3 at the XXZ point has eigenvalue -3/2 on the one-down vector") {
  const SparseExactMatrix h = build_hamiltonian(3, BigRat(0));
  std::vector<BigRat> v(h.configs.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = std::popcount(h.configs[i]) == 1 ? 1 : 0;
  for (size_t i = 0; i < v.size(); ++i) {
    BigRat acc = 0;
    for (const auto& [j, x] : h.rows[i]) acc += x * v[j];
    CHECK(acc == make_rat(-3, 2) * v[i]);
  }
}

TEST_CASE("ground vector for N = 3") {
  const GroundStateVector& g = cached_ground_vector(3);
  CHECK(g.component("001") == UniPoly::constant(1, "zeta"));
  CHECK(g.component("010") == UniPoly::constant(1, "zeta"));
  CHECK(g.component("111") == UniPoly::monomial(1, 1, "zeta"));
  CHECK(g.norm_squared() == UniPoly({BigRat(3), BigRat(0), BigRat(1)}, "zeta"));
  CHECK_THROWS_AS(g.component("011"), Error);
  const auto j = g.to_json();
  CHECK(j["components"]["111"] == nlohmann::json::array({"0", "1"}));
  CHECK(j["orbit_sizes"]["001"] == 3);
}

TEST_CASE("ground vectors and conjectures for N <= 11") {
  for (int n_sites : {3, 5, 7, 9, 11}) {
    INFO("N = " << n_sites);
    require_all_pass(verify_ground_vector(cached_ground_vector(n_sites)));
    require_all_pass(verify_conjecture_1(n_sites));
    require_all_pass(verify_conjectures_2_3_4(n_sites));
    require_all_pass(verify_symmetries(n_sites));
  }
}

TEST_CASE("float ground energy is -N/2") {
  for (int n_sites : {3, 5, 7, 9, 11}) require_all_pass(float_spectrum_check(n_sites, 4, 7));
}

TEST_CASE("clear_inverse_square") {
  // zeta^3 (1 + 2 z) at z = zeta^-2 is zeta^3 + 2 zeta
  CHECK(clear_inverse_square(UniPoly({BigRat(1), BigRat(2)}), 3) ==
        UniPoly({BigRat(0), BigRat(2), BigRat(0), BigRat(1)}, "zeta"));
  CHECK_THROWS_AS(clear_inverse_square(UniPoly({BigRat(1), BigRat(0), BigRat(1)}), 3), Error);
}
