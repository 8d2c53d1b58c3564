#include <doctest.h>

#include <random>

#include "xyzpoly/errors.hpp"
#include "xyzpoly/factor.hpp"
#include "xyzpoly/tau.hpp"
#include "xyzpoly/zfactor.hpp"

using namespace xyzpoly;

namespace {

UniPoly yp(std::initializer_list<long> cs) {
  std::vector<BigRat> v;
  for (long c : cs) v.emplace_back(c);
  return UniPoly(std::move(v), "y");
}

UniPoly product(const std::vector<IrreducibleFactor>& fs) {
  UniPoly out = UniPoly::constant(1, "y");
  for (const auto& f : fs) out *= pow(f.factor, f.multiplicity);
  return out;
}

void require_all_pass(const VerificationReport& rep) {
  for (const auto& c : rep.checks()) {
    INFO(c.id << ": " << c.detail);
    CHECK(c.status == CheckStatus::Pass);
  }
}

}  // namespace

TEST_CASE("integer factorization of known products") {
  const UniPoly a = yp({1, 0, 1});
  const UniPoly b = yp({-2, 0, 0, 1});
  const UniPoly c = yp({1, 3});
  const UniPoly f = a * b * c * c * yp({0, 1});
  const auto fs = factor_over_integers(f * BigRat(6));
  REQUIRE(fs.size() == 4);
  CHECK(fs[0].factor == yp({0, 1}));
  CHECK(fs[1].factor == c);
  CHECK(fs[1].multiplicity == 2);
  CHECK(fs[2].factor == a);
  CHECK(fs[3].factor == b);
  CHECK(product(fs) == f);
}

TEST_CASE("integer factorization: Swinnerton-Dyer style polynomial stays irreducible") {
  // x^4 - 10x^2 + 1 splits modulo every prime but is irreducible over Z.
  const UniPoly f = yp({1, 0, -10, 0, 1});
  const auto fs = factor_over_integers(f);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].factor == f);
}

TEST_CASE("integer factorization property: random products round trip") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly f = UniPoly::constant(1, "y");
    const int parts = 1 + trial % 4;
    for (int i = 0; i < parts; ++i) {
      std::vector<BigRat> c;
      const int d = 1 + (trial + i) % 4;
      for (int j = 0; j <= d; ++j) c.emplace_back(coef(rng));
      if (c.back() == 0) c.back() = 1;
      if (c.front() == 0) c.front() = 2;
      f *= UniPoly(c, "y");
    }
    const auto fs = factor_over_integers(f);
    CHECK(product(fs) == primitive_part(f));
    for (const auto& g : fs) {
      CHECK(has_integer_coeffs(g.factor));
      CHECK(g.factor.leading() > 0);
    }
  }
}

TEST_CASE("c_k values") {
  CHECK(c_coefficient(0) == 1);
  CHECK(c_coefficient(1) == make_rat(1, 8));
  CHECK(c_coefficient(-2) == pow(BigRat(2), -4) * pow(make_rat(2, 3), -3));
}

TEST_CASE("extract_p examples") {
  std::string method;
  CHECK(extract_p(1, &method) == yp({1, 1, 2}));
  CHECK(method == "gcd");
  CHECK(extract_p(0) == yp({1}));
  CHECK(extract_p(-2) == yp({1, -2, 5}));
  CHECK(odd_split_target(-2) == yp({1, 0, 6, 0, 25}));
}

TEST_CASE("factorization fallback agrees with the gcd path") {
  for (int k = -4; k <= 4; ++k) {
    INFO("k = " << k);
    CHECK(extract_p_by_factoring(k) == p_poly(k));
  }
}

TEST_CASE("extract_q examples") {
  CHECK(mobius_substitute(p_poly(-2), MobiusMap{1, -1, 3, 1}, 2) == yp({8, 0, 8}));
  CHECK(extract_q(1) == yp({1}));
  CHECK(extract_q(2) == yp({1, 0, 3}));
  CHECK(extract_q(-2) == yp({1, 0, 3, 0, 39, 0, 21}));
}

TEST_CASE("p and q match the reference listing") {
  CHECK(p_poly(-3) == yp({1, -3, 12, -30, 81, -63, 66}));
  CHECK(p_poly(2) == yp({1, 2, 7, 10, 21, 12, 11}));
  CHECK(p_poly(3) == yp({1, 3, 15, 35, 105, 195, 435, 555, 840, 710, 738, 294, 170}));
  CHECK(q_poly(-2) == yp({1, 0, 3}));
  CHECK(q_poly(2) == yp({1, 0, 8, 0, 29, 0, 26}));
  CHECK(q_poly(3) == yp({1, 0, 15, 0, 112, 0, 518, 0, 1257, 0, 1547, 0, 646}));
}

TEST_CASE("factorization round trips") {
  require_all_pass(check_factorizations(-4, 4));
}

TEST_CASE("p and q symmetries, shapes and evenness") {
  require_all_pass(check_pq_symmetries(-4, 3));
}

TEST_CASE("special values and the ASM numbers") {
  CHECK(p_poly(1)(make_rat(1, 3)) == make_rat(14, 9));
  CHECK(asm_count(1) == 1);
  CHECK(asm_count(3) == 7);
  CHECK(asm_count(4) == 42);
  CHECK(asm_count(9) == BigInt("911835460"));
  require_all_pass(special_values(3, 9));
}

TEST_CASE("alternating components from p and q") {
  const UniPoly z2 = UniPoly::monomial(1, 2, "zeta");
  const UniPoly one = UniPoly::constant(1, "zeta");
  CHECK(alt_polynomial(1) == one);
  CHECK(alt_polynomial(2) == one * BigRat(2));
  CHECK(alt_polynomial(3) == one * BigRat(7) + z2);
  CHECK(alt_polynomial(4) == (one * BigRat(3) + z2) * (one * BigRat(7) + z2) * BigRat(2));
}
