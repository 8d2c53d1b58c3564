#include "xyzpoly/factor.hpp"

#include <vector>

#include "xyzpoly/errors.hpp"
#include "xyzpoly/poly_json.hpp"
#include "xyzpoly/tau.hpp"
#include "xyzpoly/zfactor.hpp"

namespace xyzpoly {

namespace {

int weight(int k) { return k * (k + 1); }

const MobiusMap kOddMap{-1, 1, 3, 1};   // y -> (1-y)/(1+3y)
const MobiusMap kEvenMap{1, -1, 3, 1};  // y -> (y-1)/(1+3y)
const MobiusMap kAltMap{-1, 1, 1, 3};   // zeta -> (1-zeta)/(3+zeta)

UniPoly s_of_square(int n) {
  return substitute_square(cached_s_family().at(n)).with_var("y");
}

bool sign_convention_holds(int k, const UniPoly& p) {
  const BigRat d = p.coeff(1);
  if (k >= 1) return d > 0;
  if (k <= -2) return d < 0;
  return true;
}

UniPoly normalize_at_zero(const UniPoly& g) {
  const BigRat g0 = g.coeff(0);
  if (g0 == 0) throw Error(ErrorCode::SplitFailure, "candidate factor vanishes at y = 0");
  return g * (1 / g0);
}

UniPoly p_symmetry_image(const UniPoly& p, int w) {
  return mobius_substitute(p, kOddMap, w) * pow(BigRat(2), -w);
}

UniPoly q_symmetry_image(const UniPoly& q, int w) {
  return mobius_substitute(q, kEvenMap, w) * pow(BigRat(2), -w);
}

struct Extracted {
  UniPoly poly;
  std::string method;
};

Extracted extract_p_impl(int k) {
  const int w = weight(k);
  const UniPoly F = odd_split_target(k);
  if (F.degree() != 2 * w) {
    throw Error(ErrorCode::SplitFailure, "deg s_" + std::to_string(2 * k + 1) + "(y^2) = " +
                                             std::to_string(F.degree()) + ", expected " +
                                             std::to_string(2 * w));
  }
  if (w == 0) return {UniPoly::constant(1, "y"), "gcd"};
  // p_k divides F and is fixed by the symmetry, so it divides the image of F.
  const UniPoly g = gcd(F, mobius_substitute(F, kOddMap, 2 * w));
  if (g.degree() == w) {
    UniPoly p = normalize_at_zero(g).with_var("y");
    if (p * reflect(p) == F) {
      if (!has_integer_coeffs(p)) {
        throw Error(ErrorCode::NonIntegerCoefficients,
                    "p_" + std::to_string(k) + " has non-integer coefficients: " + to_string(p));
      }
      return {p, "gcd"};
    }
  }
  return {extract_p_by_factoring(k), "factor"};
}

}  // namespace

BigRat c_coefficient(int k) {
  if (k >= 0) return pow(BigRat(2), -static_cast<long>(k) * (k + 2));
  return pow(BigRat(2), -static_cast<long>(k) * k) * pow(make_rat(2, 3), 2L * k + 1);
}

UniPoly odd_split_target(int k) {
  const UniPoly S = s_of_square(2 * k + 1);
  const BigRat s0 = S.coeff(0);
  if (s0 == 0) throw Error(ErrorCode::SplitFailure, "s_" + std::to_string(2 * k + 1) + "(0) = 0");
  return S * (1 / s0);
}

UniPoly extract_p_by_factoring(int k) {
  const int w = weight(k);
  const UniPoly F = odd_split_target(k);
  if (w == 0) return UniPoly::constant(1, "y");
  const auto factors = factor_over_integers(F);

  // Pair each irreducible g with its reflection. A self-reflective factor
  // must split evenly; a genuine pair {g, g(-y)} of multiplicity m
  // contributes g^a g(-y)^(m-a) for some 0 <= a <= m.
  struct Choice {
    UniPoly g, r;
    int m;
  };
  std::vector<Choice> pairs;
  UniPoly fixed = UniPoly::constant(1, "y");
  std::vector<bool> used(factors.size(), false);
  for (size_t i = 0; i < factors.size(); ++i) {
    if (used[i]) continue;
    const UniPoly& g = factors[i].factor;
    const UniPoly r = primitive_part(reflect(g));
    if (r == g) {
      if (factors[i].multiplicity % 2 != 0) {
        throw Error(ErrorCode::SplitFailure, "self-reflective factor " + to_string(g) +
                                                 " with odd multiplicity");
      }
      fixed *= pow(g, factors[i].multiplicity / 2);
      used[i] = true;
      continue;
    }
    size_t j = i + 1;
    while (j < factors.size() && !(factors[j].factor == r)) ++j;
    if (j == factors.size() || factors[j].multiplicity != factors[i].multiplicity) {
      throw Error(ErrorCode::SplitFailure, "reflection of " + to_string(g) + " missing");
    }
    used[i] = used[j] = true;
    pairs.push_back({g, r, factors[i].multiplicity});
  }

  std::vector<UniPoly> by_sign, by_symmetry;
  std::vector<int> a(pairs.size(), 0);
  while (true) {
    UniPoly cand = fixed;
    for (size_t i = 0; i < pairs.size(); ++i) {
      cand *= pow(pairs[i].g, a[i]) * pow(pairs[i].r, pairs[i].m - a[i]);
    }
    cand = normalize_at_zero(cand.with_var("y"));
    if (cand.degree() == w && sign_convention_holds(k, cand)) {
      by_sign.push_back(cand);
      if (p_symmetry_image(cand, w) == cand) by_symmetry.push_back(cand);
    }
    size_t pos = 0;
    while (pos < a.size() && a[pos] == pairs[pos].m) a[pos++] = 0;
    if (pos == a.size()) break;
    ++a[pos];
  }
  const std::vector<UniPoly>& pick = by_sign.size() == 1 ? by_sign : by_symmetry;
  if (pick.size() != 1) {
    throw Error(ErrorCode::SplitFailure, "k=" + std::to_string(k) + ": " +
                                             std::to_string(by_sign.size()) +
                                             " sign-admissible splits, " +
                                             std::to_string(by_symmetry.size()) + " symmetric");
  }
  const UniPoly& p = pick.front();
  if (!(p * reflect(p) == F)) throw Error(ErrorCode::SplitFailure, "split does not reproduce F");
  if (!has_integer_coeffs(p)) {
    throw Error(ErrorCode::NonIntegerCoefficients,
                "p_" + std::to_string(k) + " has non-integer coefficients: " + to_string(p));
  }
  return p;
}

UniPoly extract_p(int k, std::string* method) {
  Extracted e = extract_p_impl(k);
  if (method) *method = e.method;
  return e.poly;
}

UniPoly extract_q(int k) {
  const int w = weight(k);
  const UniPoly S = s_of_square(2 * k);
  const UniPoly den = mobius_substitute(p_poly(-k - 1), kEvenMap, w) * c_coefficient(k);
  UniPoly q = divexact(S, den).with_var("y");
  if (!even_odd_parts(q).second.is_zero()) {
    throw Error(ErrorCode::ParityViolation,
                "q_" + std::to_string(k - 1) + " has odd-power terms: " + to_string(q));
  }
  return q;
}

namespace {

struct PCache {
  std::map<int, Extracted> p;
  std::map<int, UniPoly> q;
};

PCache& cache() {
  static PCache c;
  return c;
}

}  // namespace

const UniPoly& p_poly(int k) {
  auto& m = cache().p;
  auto it = m.find(k);
  if (it == m.end()) it = m.emplace(k, extract_p_impl(k)).first;
  return it->second.poly;
}

const UniPoly& q_poly(int k) {
  auto& m = cache().q;
  auto it = m.find(k);
  if (it == m.end()) it = m.emplace(k, extract_q(k + 1)).first;
  return it->second;
}

PQFamily pq_family(int k_min, int k_max) {
  PQFamily f;
  for (int k = k_min; k <= k_max; ++k) {
    f.p[k] = p_poly(k);
    f.p_method[k] = cache().p.at(k).method;
    f.q[k] = q_poly(k);
    f.c[k] = c_coefficient(k);
  }
  return f;
}

UniPoly alt_polynomial(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "A_n needs n >= 1");
  const int k = n / 2;
  const int wq = k * (k - 1);
  const UniPoly q_part = reverse(q_poly(k - 1), wq);
  UniPoly out;
  if (n % 2 == 0) {
    out = mobius_substitute(p_poly(k - 1), kAltMap, wq) * q_part *
          pow(BigRat(2), static_cast<long>(k) * (2 - k));
  } else {
    out = mobius_substitute(p_poly(k), kAltMap, weight(k)) * q_part *
          pow(BigRat(2), -static_cast<long>(k) * k);
  }
  return out.with_var("zeta");
}

BigInt asm_count(int n) {
  BigRat v = 1;
  for (int k = 0; k < n; ++k) {
    v *= BigRat(factorial(static_cast<unsigned long>(3 * k + 1)));
    v /= BigRat(factorial(static_cast<unsigned long>(n + k)));
  }
  return v.get_num();
}

VerificationReport check_factorizations(int k_min, int k_max) {
  VerificationReport rep;
  for (int k = k_min; k <= k_max; ++k) {
    const std::string ks = std::to_string(k);
    rep.run("factor.odd[k=" + ks + "]", [k] {
      const UniPoly& p = p_poly(k);
      const UniPoly S = s_of_square(2 * k + 1);
      const UniPoly diff = p * reflect(p) * S.coeff(0) - S;
      return Outcome{diff.is_zero(), "method " + cache().p.at(k).method,
                     diff.is_zero() ? nlohmann::json() : to_json(diff)};
    });
    rep.run("factor.even[k=" + ks + "]", [k] {
      const int w = weight(k);
      const UniPoly rebuilt =
          mobius_substitute(p_poly(-k - 1), kEvenMap, w) * q_poly(k - 1) * c_coefficient(k);
      const UniPoly diff = rebuilt - s_of_square(2 * k);
      return Outcome{diff.is_zero(), "", diff.is_zero() ? nlohmann::json() : to_json(diff)};
    });
  }
  return rep;
}

VerificationReport check_pq_symmetries(int k_min, int k_max) {
  VerificationReport rep;
  for (int k = k_min; k <= k_max; ++k) {
    const std::string ks = std::to_string(k);
    const int w = weight(k);
    rep.run("pq.p_shape[k=" + ks + "]", [k, w] {
      const UniPoly& p = p_poly(k);
      const bool ok = p.degree() == w && p.coeff(0) == 1 && has_integer_coeffs(p) &&
                      sign_convention_holds(k, p);
      return Outcome{ok, to_string(p), {}};
    });
    rep.run("pq.p_symmetry[k=" + ks + "]", [k, w] {
      const UniPoly diff = p_symmetry_image(p_poly(k), w) - p_poly(k);
      return Outcome{diff.is_zero(), "", diff.is_zero() ? nlohmann::json() : to_json(diff)};
    });
    rep.run("pq.q_shape[k=" + ks + "]", [k, w] {
      const UniPoly& q = q_poly(k);
      const bool ok = q.degree() == w && q.coeff(0) == 1 && has_integer_coeffs(q);
      return Outcome{ok, to_string(q), {}};
    });
    rep.run("pq.q_even[k=" + ks + "]", [k] {
      const UniPoly diff = reflect(q_poly(k)) - q_poly(k);
      return Outcome{diff.is_zero(), "", diff.is_zero() ? nlohmann::json() : to_json(diff)};
    });
    rep.run("pq.q_symmetry[k=" + ks + "]", [k, w] {
      const UniPoly diff = q_symmetry_image(q_poly(k), w) - q_poly(k);
      return Outcome{diff.is_zero(), "", diff.is_zero() ? nlohmann::json() : to_json(diff)};
    });
  }
  return rep;
}

VerificationReport special_values(int n_max, int a_max) {
  VerificationReport rep;
  auto fact = [](int m) { return BigRat(factorial(static_cast<unsigned long>(m))); };
  for (int n = 0; n <= n_max; ++n) {
    const std::string ns = std::to_string(n);
    rep.run("special.p_at_third[n=" + ns + "]", [n, fact] {
      BigRat rhs = pow(make_rat(2, 3), static_cast<long>(n) * (n + 1));
      for (int k = 0; k <= n; ++k) {
        rhs *= fact(2 * k) * fact(6 * k + 1) / (fact(4 * k) * fact(4 * k + 1));
      }
      const BigRat lhs = p_poly(n)(make_rat(1, 3));
      return Outcome{lhs == rhs, "p(1/3) = " + lhs.get_str() + ", product = " + rhs.get_str(), {}};
    });
    rep.run("special.q_leading[n=" + ns + "]", [n, fact] {
      BigRat rhs = pow(BigRat(2), -static_cast<long>(n) - 1);
      for (int k = 0; k <= n; ++k) {
        rhs *= fact(2 * k + 1) * fact(6 * k + 4) / (fact(4 * k + 2) * fact(4 * k + 3));
      }
      const BigRat lhs = q_poly(n).coeff(weight(n));
      return Outcome{lhs == rhs, "lead = " + lhs.get_str() + ", product = " + rhs.get_str(), {}};
    });
  }
  for (int n = 1; n <= a_max; ++n) {
    rep.run("special.asm[n=" + std::to_string(n) + "]", [n] {
      const BigRat lhs = alt_polynomial(n)(0);
      const BigInt rhs = asm_count(n);
      return Outcome{lhs == BigRat(rhs), "A(0) = " + lhs.get_str() + ", ASM = " + rhs.get_str(), {}};
    });
  }
  return rep;
}

}  // namespace xyzpoly
