#include <doctest.h>

#include "xyzpoly/poly_json.hpp"
#include "xyzpoly/qpoly.hpp"
#include "xyzpoly/tau.hpp"

using namespace xyzpoly;

namespace {

BiPoly parse_xz(const std::vector<std::tuple<int, int, long>>& terms) {
  BiPoly out = BiPoly::constant(0);
  for (auto [k, m, c] : terms) out += BiPoly::monomial(c, k, m);
  return out;
}

void require_all_pass(const VerificationReport& rep) {
  for (const auto& c : rep.checks()) {
    INFO(c.id << ": " << c.detail << " " << c.residual.dump());
    CHECK(c.status == CheckStatus::Pass);
  }
}

}  // namespace

TEST_CASE("P_n for small n") {
  CHECK(compute_P(0).poly == BiPoly::constant(1));
  CHECK(compute_P(1).poly == parse_xz({{1, 0, 1}, {0, 0, 3}}));
  CHECK(compute_P(2).poly == parse_xz({{2, 0, 1}, {2, 1, 1}, {1, 0, 5}, {1, 1, 15}, {0, 0, 10}}));
  const BiPoly p3 = parse_xz({{3, 0, 1}, {3, 1, 3}, {3, 2, 4}, {2, 0, 7}, {2, 1, 35}, {2, 2, 126},
                              {1, 0, 21}, {1, 1, 133}, {1, 2, 126}, {0, 0, 35}, {0, 1, 21}});
  CHECK(compute_P(3).poly == p3);
  CHECK(compute_P(3).method == "pde");
}

TEST_CASE("P_4 matches the reference listing") {
  const BiPoly p4 = parse_xz({{4, 0, 1},    {4, 1, 6},    {4, 2, 18},   {4, 3, 30},   {4, 4, 9},
                              {3, 0, 9},    {3, 1, 72},   {3, 2, 342},  {3, 3, 1368}, {3, 4, 513},
                              {2, 0, 36},   {2, 1, 342},  {2, 2, 1998}, {2, 3, 3906}, {2, 4, 1782},
                              {1, 0, 84},   {1, 1, 864},  {1, 2, 2052}, {1, 3, 2376}, {0, 0, 126},
                              {0, 1, 252},  {0, 2, 198}});
  CHECK(qpoly(4).poly == p4);
}

TEST_CASE("PDE coefficients: T has the closed form") {
  const PdeCoefficients c = pde_coefficients(3);
  const BiPoly x = BiPoly::monomial(1, 1, 0), z = BiPoly::monomial(1, 0, 1);
  const BiPoly one = BiPoly::constant(1);
  const BiPoly T = BiPoly::constant(-2) * z * (one - z) * (one - BiPoly::constant(9) * z) *
                   (one + x - BiPoly::constant(3) * x * z + x * x * z);
  CHECK(c.T == T);
  CHECK(pde_residual(c, qpoly(3).poly).is_zero());
}

TEST_CASE("TQ nullspace solve agrees with the PDE for n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    INFO("n = " << n);
    CHECK(tq_nullspace_dimension(n) == 1);
    CHECK(compute_P_via_TQ(n).poly == qpoly(n).poly);
  }
}

TEST_CASE("invariants and both halves of the boundary coefficients for n <= 20") {
  const auto sbar = sbar_sequence(20);
  for (int n = 0; n <= 20; ++n) {
    INFO("n = " << n);
    const QPolynomial& p = qpoly(n);
    require_all_pass(check_qpoly_invariants(p));
    CHECK(p.coeffs.back() == cached_s_family().at(n));
    CHECK(p.coeffs.front() == sbar[static_cast<size_t>(n)]);
  }
}

TEST_CASE("TQ identity, r0 relation and Wronskian for small n") {
  for (int n = 0; n <= 4; ++n) {
    INFO("n = " << n);
    require_all_pass(verify_TQ(n));
    require_all_pass(verify_r0_relation(n));
    require_all_pass(wronskian(n).report);
  }
}

TEST_CASE("Wronskian values") {
  const Wronskian w0 = wronskian(0);
  CHECK(w0.cleared == UniPoly::constant(-1));
  CHECK(w0.z_shift == 0);
  // P_1(1/z, z) = 1/z + 3, so z W_1 = -(1 + 3z)
  const Wronskian w1 = wronskian(1);
  CHECK(w1.z_shift == 1);
  CHECK(w1.cleared == UniPoly({BigRat(-1), BigRat(-3)}));
}

TEST_CASE("evaluation corollaries") {
  const QPolynomial& p2 = qpoly(2);
  CHECK(p2.poly.eval_first(1) == UniPoly({BigRat(16), BigRat(16)}).with_var("z"));
}
