#include <doctest.h>

#include "xyzpoly/errors.hpp"
#include "xyzpoly/sos.hpp"

using namespace xyzpoly;

namespace {

UniPoly sp(std::vector<BigRat> c) { return UniPoly(std::move(c), "s"); }

void require_all_pass(const VerificationReport& rep) {
  for (const auto& c : rep.checks()) {
    INFO(c.id << ": " << c.detail << " " << c.residual.dump());
    CHECK(c.status == CheckStatus::Pass);
  }
}

}  // namespace

TEST_CASE("sos p_n against frozen values") {
  CHECK(sos_p(0) == sp({1}));
  CHECK(sos_p(1) == sp({1, 3}));
  CHECK(sos_p(2) == sp({1, 9, 29, 35, 10}));
  CHECK(sos_p(3) == sp({1, 18, make_rat(561, 4), make_rat(2451, 4), make_rat(3231, 2), make_rat(5181, 2),
                        make_rat(9789, 4), make_rat(5103, 4), 336, 35}));
  CHECK(sos_p(4) == sp({1, 30, make_rat(1659, 4), make_rat(13979, 4), make_rat(159939, 8), make_rat(163611, 2),
                        make_rat(491499, 2), 548172, make_rat(3638511, 4), make_rat(2234767, 2),
                        make_rat(4023231, 4), make_rat(2614965, 4), make_rat(2405567, 8), 94941, 19521, 2352, 126}));
  for (int n = 0; n <= 10; ++n) CHECK(sos_p(n).coeff(0) == 1);
}

TEST_CASE("sos recurrence reports a non-divisible step") {
  // A non-constant p_{n-1} that does not divide the right-hand side.
  CHECK_THROWS_AS(sos_p_next(sp({1, 1}), sp({1, 3}), 1), PolynomialityViolation);
  CHECK_THROWS_AS(sos_p_next(sp({1}), sp({1, 3}), 0), Error);
}

TEST_CASE("sos kernel n = 0 and n = 2") {
  const SosKernel k0 = sos_P_kernel(0);
  CHECK(k0.P == BiPoly::constant(1, {"t", "s"}));

  const SosKernel k2 = sos_P_kernel(2);
  CHECK(k2.cap_t == 2);
  CHECK(k2.cap_s == 4);
  BiPoly::Terms expect = {{{2, 2}, BigRat(3)}, {{2, 1}, BigRat(7)}, {{2, 0}, BigRat(2)},
                          {{1, 3}, BigRat(3)}, {{1, 2}, BigRat(10)}, {{1, 1}, BigRat(3)},
                          {{0, 4}, BigRat(2)}, {{0, 3}, BigRat(7)}, {{0, 2}, BigRat(3)}};
  CHECK(k2.P == BiPoly(expect, {"t", "s"}));
  CHECK(sos_pde_residual(sos_pde_coefficients(2), k2.P).is_zero());
  CHECK_THROWS_AS(sos_P_kernel(3), Error);
}

TEST_CASE("sos kernel n = 4 is one-dimensional at the predicted caps") {
  const SosKernel k4 = sos_P_kernel(4);
  CHECK(k4.cap_t == 4);
  CHECK(k4.cap_s == 12);
  CHECK(k4.attempts.size() == 1);
  CHECK(has_integer_coeffs(k4.P));
}

TEST_CASE("sos bridge and report") {
  require_all_pass(verify_sos(10, {0, 2, 4}));
  const SosFamily f = sos_family(4, {0, 2, 4});
  for (int n : {0, 2, 4}) CHECK(sos_bridge_image(f.P_sos.at(n), n) == sos_p(n));
  CHECK(f.scale.at(0) == 1);
  // n = 2: P(1+2s, s) equals p_2 up to scale.
  const UniPoly image = sos_bridge_image(sos_P_kernel(2).P, 2);
  CHECK(image * (sos_p(2).leading() / image.leading()) == sos_p(2));
}
