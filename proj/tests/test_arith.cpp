#include <doctest.h>

#include <memory>
#include <random>

#include "xyzpoly/bipoly.hpp"
#include "xyzpoly/errors.hpp"
#include "xyzpoly/linalg.hpp"
#include "xyzpoly/poly_json.hpp"
#include "xyzpoly/quadext.hpp"
#include "xyzpoly/ratfunc.hpp"
#include "xyzpoly/unipoly.hpp"

using namespace xyzpoly;

namespace {

UniPoly up(std::initializer_list<long> cs, const char* var = "z") {
  std::vector<BigRat> v;
  for (long c : cs) v.emplace_back(c);
  return UniPoly(std::move(v), var);
}

struct Rng {
  std::mt19937_64 gen{20261014};
  long coeff() { return std::uniform_int_distribution<long>(-1000000, 1000000)(gen); }
  int small(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  UniPoly uni(int max_deg) {
    std::vector<BigRat> v(static_cast<size_t>(small(0, max_deg) + 1));
    for (auto& c : v) c = coeff();
    return UniPoly(std::move(v));
  }
  BiPoly bi(int max_deg, int max_terms) {
    BiPoly::Terms t;
    const int n = small(1, max_terms);
    for (int k = 0; k < n; ++k) {
      BigRat c(coeff(), small(1, 7));
      c.canonicalize();
      t[{small(0, max_deg), small(0, max_deg)}] = c;
    }
    return BiPoly(std::move(t));
  }
};

}  // namespace

TEST_CASE("rationals are parsed canonically") {
  CHECK(parse_rational("6/4") == BigRat(3, 2));
  CHECK(parse_rational("-0/5") == 0);
  CHECK(to_string(parse_rational("+10")) == "10");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("univariate exact division") {
  CHECK(divexact(up({1, 3, 4}), up({1})) == up({1, 3, 4}));
  CHECK(divexact(up({1, 0, 3, 0, 4}, "y"), up({1, 1, 2}, "y")) == up({1, -1, 2}, "y"));
  CHECK_THROWS_AS(divexact(up({1, 1}), up({1, 2})), NotDivisible);
  try {
    divexact(up({1, 1}), up({1, 2}));
  } catch (const NotDivisible& e) {
    CHECK(unipoly_from_json(nlohmann::json::parse(e.remainder())) == UniPoly::constant(BigRat(1, 2)));
  }
}

TEST_CASE("mobius substitution examples") {
  const MobiusMap ident{1, 0, 0, 1};
  CHECK(mobius_substitute(up({1}), ident, 0) == up({1}));
  const MobiusMap psym{-1, 1, 3, 1};
  CHECK(mobius_substitute(up({1, 1, 2}, "y"), psym, 2) * BigRat(1, 4) == up({1, 1, 2}, "y"));
  // argument (y - 1) / (1 + 3y)
  const MobiusMap even_map{1, -1, 3, 1};
  CHECK(mobius_substitute(up({1, -2, 5}, "y"), even_map, 2) == up({8, 0, 8}, "y"));
  const MobiusMap degenerate{1, 2, 2, 4};
  CHECK_THROWS_AS(mobius_substitute(up({1, 1}), degenerate, 1), Error);
  CHECK_THROWS_AS(mobius_substitute(up({1, 1, 1}), psym, 1), Error);
}

TEST_CASE("interpolation examples") {
  std::vector<std::pair<BigRat, BigRat>> s1{{0, 3}, {1, 4}, {-1, 4}};
  CHECK(interpolate(s1) == up({3, 0, 1}));
  std::vector<std::pair<BigRat, BigRat>> s2{{2, 1}};
  CHECK(interpolate(s2) == up({1}));
  std::vector<std::pair<BigRat, BigRat>> s3{{0, 1}, {1, 2}};
  CHECK(interpolate(s3) == up({1, 1}));
  std::vector<std::pair<BigRat, BigRat>> dup{{1, 1}, {1, 2}};
  try {
    interpolate(dup);
    FAIL("expected DuplicateAbscissa");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateAbscissa);
  }
}

TEST_CASE("ring axioms on random univariate triples") {
  Rng rng;
  for (int t = 0; t < 1000; ++t) {
    const UniPoly a = rng.uni(6), b = rng.uni(6), c = rng.uni(6);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
  }
}

TEST_CASE("ring axioms on random bivariate triples") {
  Rng rng;
  for (int t = 0; t < 1000; ++t) {
    const BiPoly a = rng.bi(4, 5), b = rng.bi(4, 5), c = rng.bi(4, 5);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == BiPoly());
  }
}

TEST_CASE("divexact inverts multiplication") {
  Rng rng;
  for (int t = 0; t < 300; ++t) {
    const UniPoly a = rng.uni(8), b = rng.uni(5);
    if (b.is_zero()) continue;
    REQUIRE(divexact(a * b, b) == a);
    const BiPoly p = rng.bi(5, 6), q = rng.bi(3, 4);
    REQUIRE(divexact(p * q, q) == p);
  }
}

TEST_CASE("bivariate division rejects non-multiples") {
  const BiPoly x = BiPoly::monomial(1, 1, 0);
  const BiPoly z = BiPoly::monomial(1, 0, 1);
  const BiPoly one = BiPoly::constant(1);
  CHECK_FALSE(try_divexact(x + one, x - one).has_value());
  CHECK_FALSE(try_divexact(x * z + one, z).has_value());
  CHECK(try_divexact(x * x - z * z, x - z) == x + z);
  CHECK_THROWS_AS(divexact(x + z, x - z), NotDivisible);
}

TEST_CASE("mobius substitution is an involution for the symmetry map") {
  Rng rng;
  const MobiusMap psym{-1, 1, 3, 1};
  for (int t = 0; t < 200; ++t) {
    const UniPoly p = rng.uni(6).with_var("y");
    const int w = std::max(p.degree(), 0) + rng.small(0, 2);
    const UniPoly twice = mobius_substitute(mobius_substitute(p, psym, w), psym, w);
    REQUIRE(twice * pow(BigRat(2), -2L * w) == p);
  }
}

TEST_CASE("interpolation round trip") {
  Rng rng;
  for (int t = 0; t < 200; ++t) {
    const UniPoly p = rng.uni(7);
    std::vector<std::pair<BigRat, BigRat>> samples;
    for (int k = 0; k <= p.degree() + rng.small(0, 3); ++k) {
      const BigRat at(k * 3 - 7, 2);
      samples.emplace_back(at, p(at));
    }
    REQUIRE(interpolate(samples) == p);
  }
}

TEST_CASE("json round trip is bit exact") {
  Rng rng;
  for (int t = 0; t < 100; ++t) {
    const UniPoly p = rng.uni(5) * BigRat(1, rng.small(1, 9));
    REQUIRE(unipoly_from_json(to_json(p)) == p);
    const BiPoly b = rng.bi(5, 8);
    const BiPoly back = bipoly_from_json(nlohmann::json::parse(dump(b)));
    REQUIRE(back == b);
    REQUIRE(dump(back) == dump(b));
  }
  CHECK(dump(up({1, 3, 4})) == R"({"coeffs":["1","3","4"],"var":"z"})");
  CHECK_THROWS_AS(unipoly_from_json(nlohmann::json::parse(R"({"coeffs":["1/0"]})")), Error);
}

TEST_CASE("rational functions") {
  const BiPoly x = BiPoly::monomial(1, 1, 0);
  const BiPoly z = BiPoly::monomial(1, 0, 1);
  const BiPoly one = BiPoly::constant(1);
  const RatFunc a(x, BiPoly(x - one) * BigRat(6));
  CHECK(a.den() == x - one);
  CHECK(a.num() == x * BigRat(1, 6));
  const RatFunc b(z, x - one);
  CHECK(equivalent(a + b, RatFunc(x * BigRat(1, 6) + z, x - one)));
  CHECK(equivalent(RatFunc(x * x - one, x - one).cancel(x - one), RatFunc(x + one)));
  CHECK((a / a).is_polynomial());
  CHECK(equivalent(a * a.inverse(), RatFunc(one)));
}

TEST_CASE("conjugate product has zero radical part") {
  Rng rng;
  const BiPoly x = BiPoly::monomial(1, 1, 0);
  auto rad = std::make_shared<const RatFunc>(x * x * x + BiPoly::monomial(2, 0, 1));
  for (int t = 0; t < 50; ++t) {
    QuadExtElem e(RatFunc(rng.bi(3, 4), rng.bi(1, 2) + BiPoly::constant(1)), RatFunc(rng.bi(3, 4)), rad);
    const QuadExtElem prod = e * e.conj();
    REQUIRE(prod.radical_part().is_zero());
    REQUIRE(equivalent(prod.rational_part(), e.norm()));
  }
  const QuadExtElem d = QuadExtElem::generator(rad);
  CHECK(equivalent((d * d).rational_part(), *rad));
  auto other = std::make_shared<const RatFunc>(x);
  CHECK_THROWS_AS(d + QuadExtElem::generator(other), Error);
}

TEST_CASE("fraction-free nullspace") {
  Matrix<BigRat> a{{1, 2, 3}, {2, 4, 6}, {1, 0, BigRat(1, 2)}};
  const auto ker = nullspace(a, 3);
  REQUIRE(ker.size() == 1);
  for (const auto& row : a) {
    BigRat dot = 0;
    for (size_t j = 0; j < 3; ++j) dot += row[j] * BigRat(ker[0][j]);
    CHECK(dot == 0);
  }
  CHECK(rank(a) == 2);
  Matrix<UniPoly> pm{{up({0, 1}), up({1})}, {up({0, 0, 1}), up({0, 1})}};
  auto rref = fraction_free_rref(pm, up({1}));
  CHECK(rref.pivots.size() == 1);
}

TEST_CASE("rational reconstruction") {
  const UniPoly num = up({1, 2});
  const UniPoly den = up({3, 0, 1});
  UniPoly m = up({1});
  std::vector<std::pair<BigRat, BigRat>> samples;
  for (int k = 0; k < 6; ++k) {
    m *= up({-k, 1});
    samples.emplace_back(k, num(k) / den(k));
  }
  auto rr = rational_reconstruct(interpolate(samples), m, 2);
  REQUIRE(rr.has_value());
  CHECK(rr->first == num);
  CHECK(rr->second == den);
}
