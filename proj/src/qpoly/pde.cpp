#include <map>
#include <memory>

#include "xyzpoly/errors.hpp"
#include "xyzpoly/poly_json.hpp"
#include "xyzpoly/qpoly.hpp"
#include "xyzpoly/tau.hpp"

namespace xyzpoly {

QPolynomial make_qpolynomial(int n, std::vector<UniPoly> coeffs, std::string method) {
  QPolynomial p;
  p.n = n;
  for (auto& c : coeffs) c = c.with_var("z");
  p.poly = BiPoly::from_coefficients(coeffs);
  p.coeffs = std::move(coeffs);
  p.method = std::move(method);
  return p;
}

PdeCoefficients pde_coefficients(int n) {
  const BiPoly x = BiPoly::monomial(1, 1, 0);
  const BiPoly z = BiPoly::monomial(1, 0, 1);
  const BiPoly one = BiPoly::constant(1);
  auto k = [](long c) { return BiPoly::constant(c); };
  const BiPoly N = k(n);
  const BiPoly x2 = x * x, x3 = x2 * x;
  const BiPoly z2 = z * z, z3 = z2 * z;
  const BiPoly common = one + x - k(3) * x * z + x2 * z;

  PdeCoefficients c;
  c.A = k(2) * x * common * (x + k(4) * z - k(6) * x * z - k(3) * x * z2 + k(4) * x2 * z2);
  c.B = k(4) * common * (x + k(3) * z - k(7) * x * z + k(3) * x2 * z2) +
        k(2) * N * x *
            (one - k(14) * z + k(21) * z2 - k(8) * x3 * z3 +
             k(3) * x2 * z * (k(3) * z2 + k(6) * z - one) -
             x * (one - k(9) * z + k(23) * z2 + k(9) * z3));
  c.C = N * (z * (k(9) * z - k(5)) + x2 * z * (k(3) * z2 + k(11) * z - k(2)) +
             x * (k(9) * z3 - k(38) * z2 + k(19) * z - k(2)) - k(4) * x3 * z3 +
             N * z *
                 (one - k(9) * z - x * (k(9) * z2 - k(36) * z + k(3)) +
                  x2 * (k(3) * z2 - k(31) * z + k(4)) + k(8) * x3 * z2));
  c.T = -k(2) * z * (one - z) * (one - k(9) * z) * common;
  return c;
}

BiPoly pde_residual(const PdeCoefficients& pde, const BiPoly& p) {
  const BiPoly px = p.d_first();
  return pde.A * px.d_first() + pde.B * px + pde.C * p + pde.T * p.d_second();
}

namespace {

// Coefficients of one operator part, indexed by x-power.
struct Part {
  std::vector<UniPoly> by_power;
  UniPoly at(int p) const {
    if (p < 0 || p >= static_cast<int>(by_power.size())) return UniPoly();
    return by_power[static_cast<size_t>(p)];
  }
  int degree() const { return static_cast<int>(by_power.size()) - 1; }
};

Part split(const BiPoly& b) {
  Part p;
  for (int k = 0; k <= b.degree_first(); ++k) p.by_power.push_back(b.coeff_first(k));
  return p;
}

// Coefficient of x^j in the operator applied to r x^k.
UniPoly contribution(const Part& A, const Part& B, const Part& C, const Part& T, int k, int j,
                     const UniPoly& r) {
  const BigRat kk(k);
  UniPoly out = A.at(j - k + 2) * (kk * (kk - 1)) + B.at(j - k + 1) * kk + C.at(j - k);
  out *= r;
  const UniPoly t = T.at(j - k);
  if (!t.is_zero()) out += t * r.derivative();
  return out;
}

}  // namespace

QPolynomial compute_P(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
  const PdeCoefficients pde = pde_coefficients(n);
  const Part A = split(pde.A), B = split(pde.B), C = split(pde.C), T = split(pde.T);
  // Highest x-shift of the operator; the unknown r_m first appears at x^(m+h).
  const int h = std::max({A.degree() - 2, B.degree() - 1, C.degree(), T.degree()});
  if (T.degree() >= h) {
    // The top relation would involve a z-derivative of the unknown.
    QPolynomial p = compute_P_via_TQ(n);
    p.method = "tq-nullspace (pde top relation is differential)";
    return p;
  }
  std::vector<UniPoly> r(static_cast<size_t>(n) + 1);
  r[static_cast<size_t>(n)] = cached_s_family().at(n).with_var("z");

  auto relation = [&](int j, int from) {
    UniPoly sum;
    for (int k = from; k <= n; ++k) {
      if (j - k > h || j - k < -2) continue;
      sum += contribution(A, B, C, T, k, j, r[static_cast<size_t>(k)]);
    }
    return sum;
  };

  // With r_n alone the top power n + h must already vanish.
  if (const UniPoly top = relation(n + h, n); !top.is_zero()) {
    throw Error(ErrorCode::TruncationFailure,
                "leading relation at x^" + std::to_string(n + h) + " is not satisfied: " + dump(top));
  }
  for (int m = n - 1; m >= 0; --m) {
    const int j = m + h;
    const BigRat mm(m);
    const UniPoly pivot = A.at(h + 2) * (mm * (mm - 1)) + B.at(h + 1) * mm + C.at(h);
    if (pivot.is_zero()) {
      QPolynomial p = compute_P_via_TQ(n);
      p.method = "tq-nullspace (pde pivot vanished at k=" + std::to_string(m) + ")";
      return p;
    }
    const UniPoly rhs = relation(j, m + 1);
    auto [q, rem] = divmod(-rhs, pivot);
    if (!rem.is_zero()) {
      throw PolynomialityViolation("descending relation at x^" + std::to_string(j) +
                                       " does not give a polynomial r_" + std::to_string(m),
                                   m, dump(rem));
    }
    r[static_cast<size_t>(m)] = std::move(q);
  }
  for (int j = h - 1; j >= -1; --j) {
    const UniPoly low = relation(j, 0);
    if (!low.is_zero()) {
      throw Error(ErrorCode::TruncationFailure,
                  "relation at x^" + std::to_string(j) + " is not satisfied: " + dump(low));
    }
  }
  QPolynomial p = make_qpolynomial(n, std::move(r), "pde");
  const BiPoly res = pde_residual(pde, p.poly);
  if (!res.is_zero()) {
    throw Error(ErrorCode::TruncationFailure, "full residual is nonzero: " + dump(res));
  }
  return p;
}

const QPolynomial& qpoly(int n) {
  static std::map<int, std::unique_ptr<QPolynomial>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<QPolynomial>(compute_P(n))).first;
  return *it->second;
}

VerificationReport check_qpoly_invariants(const QPolynomial& p) {
  VerificationReport rep;
  const std::string tag = "qpoly[n=" + std::to_string(p.n) + "]";
  rep.run(tag + ".normalization", [&] {
    const BigRat v = p.coeffs.back()(0);
    return Outcome{v == 1, "r_n(0) = " + v.get_str(), {}};
  });
  rep.run(tag + ".integer_nonnegative", [&] {
    for (size_t k = 0; k < p.coeffs.size(); ++k) {
      if (!has_integer_coeffs(p.coeffs[k]) || !has_nonnegative_coeffs(p.coeffs[k])) {
        return Outcome{false, "r_" + std::to_string(k) + " violates", to_json(p.coeffs[k])};
      }
    }
    return Outcome{true, "", {}};
  });
  rep.run(tag + ".degree_bound", [&] {
    for (size_t k = 0; k < p.coeffs.size(); ++k) {
      const int bound = degree_bound(p.n, static_cast<int>(k));
      if (p.coeffs[k].degree() > bound) {
        return Outcome{false,
                       "deg r_" + std::to_string(k) + " = " + std::to_string(p.coeffs[k].degree()) +
                           " > " + std::to_string(bound),
                       {}};
      }
    }
    return Outcome{true, "", {}};
  });
  return rep;
}

UniPoly p_at_inverse_z(const QPolynomial& p) {
  // z^n * sum_k r_k z^-k = sum_k r_k z^(n-k)
  UniPoly out;
  for (int k = 0; k <= p.n; ++k) {
    out += p.coeffs[static_cast<size_t>(k)] * UniPoly::monomial(1, p.n - k);
  }
  return out;
}

VerificationReport verify_r0_relation(int n) {
  VerificationReport rep;
  rep.run("r0_relation[n=" + std::to_string(n) + "]", [n] {
    const QPolynomial& p = qpoly(n);
    // 4^n z^(n+1) r_0 = (z + n(3z-1)) sum r_k z^(n-k) - (z-1) sum k r_k z^(n-k)
    UniPoly s0, s1;
    for (int k = 0; k <= n; ++k) {
      const UniPoly term = p.coeffs[static_cast<size_t>(k)] * UniPoly::monomial(1, n - k);
      s0 += term;
      s1 += term * BigRat(k);
    }
    const UniPoly lhs = p.coeffs[0] * UniPoly::monomial(pow(BigRat(4), n), n + 1);
    const UniPoly rhs = UniPoly({BigRat(-n), BigRat(1 + 3 * n)}) * s0 - UniPoly({-1, 1}) * s1;
    const UniPoly diff = lhs - rhs;
    return Outcome{diff.is_zero(), "cleared by 4^n z^(n+1)", diff.is_zero() ? nlohmann::json() : to_json(diff)};
  });
  return rep;
}

}  // namespace xyzpoly
