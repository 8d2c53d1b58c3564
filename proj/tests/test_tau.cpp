#include <doctest.h>

#include "xyzpoly/errors.hpp"
#include "xyzpoly/tau.hpp"

using namespace xyzpoly;

namespace {

UniPoly up(std::initializer_list<long> cs) {
  std::vector<BigRat> v;
  for (long c : cs) v.emplace_back(c);
  return UniPoly(std::move(v));
}

}  // namespace

TEST_CASE("tau recurrence at xi = 2/3") {
  RecurrenceFamily fam = tau_family(BigRat(2, 3));
  CHECK(fam.at(1) == up({-1}));
  CHECK(tau_next(fam, 1) == up({1}));
  fam.extend(0, 2);
  CHECK(tau_next(fam, 2) == UniPoly({BigRat(-3, 4), BigRat(-9, 4)}));
}

TEST_CASE("tau recurrence at xi = 1/6 reproduces the s family") {
  RecurrenceFamily fam = tau_family(BigRat(1, 6));
  fam.extend(0, 5);
  CHECK(fam.at(2) == up({1}));
  CHECK(fam.at(3) == up({1, 1}));
  CHECK(fam.at(4) == up({1, 3, 4}));
  CHECK(fam.at(5) == up({1, 6, 18, 30, 9}));
}

TEST_CASE("s sequence values") {
  const auto s = s_sequence(-3, 5);
  CHECK(s.at(2) == up({1, 1}));
  CHECK(s.at(-1) == up({1}));
  CHECK(s.at(-2) == UniPoly({BigRat(3, 4), BigRat(9, 4)}));
  CHECK(s.at(-3) == UniPoly({BigRat(9, 16), BigRat(27, 8), BigRat(225, 16)}));
  CHECK(s.at(5) == up({1, 10, 51, 168, 355, 318, 121}));
  CHECK_THROWS_AS(s_sequence(1, 4), Error);
}

TEST_CASE("sbar sequence values") {
  const auto sb = sbar_sequence(3);
  CHECK(sb[0] == up({1}));
  CHECK(sb[1] == up({3}));
  CHECK(sb[3] == up({35, 21}));
}

TEST_CASE("zero prefactor is reported") {
  // 2n - 4 xi - 1/3 = 0 at n = 1 for xi = 5/12
  RecurrenceFamily fam = tau_family(BigRat(5, 12));
  try {
    fam.next(1);
    FAIL("expected ZeroPrefactor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroPrefactor);
  }
}

TEST_CASE("a non-polynomial step is reported with its index") {
  // With generic xi the families stay polynomial forward; break one by hand.
  RecurrenceFamily fam(0, [](const BigRat&, int n) { return s_step(n); }, up({1}), up({1, 1}));
  try {
    fam.extend(0, 4);
    FAIL("expected PolynomialityViolation");
  } catch (const PolynomialityViolation& e) {
    CHECK(e.index() >= 2);
    CHECK_FALSE(e.remainder().empty());
  }
}

TEST_CASE("families agree and stay integral up to n = 20") {
  const auto s = s_sequence(-2, 21);
  const auto sb = sbar_sequence(20);
  RecurrenceFamily t16 = tau_family(BigRat(1, 6));
  t16.extend(0, 21);
  for (int n = 0; n <= 20; ++n) {
    REQUIRE(s.at(n) == t16.at(n + 1));
    REQUIRE(has_integer_coeffs(s.at(n)));
    REQUIRE(has_nonnegative_coeffs(s.at(n)));
    REQUIRE(has_integer_coeffs(sb[static_cast<size_t>(n)]));
    REQUIRE(has_nonnegative_coeffs(sb[static_cast<size_t>(n)]));
    REQUIRE(s.at(n).degree() <= degree_bound(n, n));
  }
  const int expected_deg[] = {0, 0, 1, 2, 4, 6};
  for (int n = 0; n <= 5; ++n) CHECK(s.at(n).degree() == expected_deg[n]);
}

TEST_CASE("backward and forward steps are consistent") {
  auto& fam = cached_s_family();
  fam.extend(-8, 8);
  for (int n = -6; n <= 6; ++n) {
    REQUIRE(fam.next(n) == fam.entries().at(n + 1));
    REQUIRE(fam.prev(n) == fam.entries().at(n - 1));
  }
}
