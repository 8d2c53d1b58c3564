#include <memory>
#include <random>

#include "xyzpoly/errors.hpp"
#include "xyzpoly/linalg.hpp"
#include "xyzpoly/poly_json.hpp"
#include "xyzpoly/qpoly.hpp"
#include "xyzpoly/quadext.hpp"
#include "xyzpoly/tau.hpp"

namespace xyzpoly {

namespace {

// Ingredients of the algebraic TQ relation. The square root is taken of the
// cubic-in-x polynomial Delta = D^2 (e1^2 - 4 e2), so delta = r / D with
// r^2 = Delta.
struct TqAlgebra {
  BiPoly x, z, one, N1, D, Delta, M;
  RatFunc e1, e2;
  QuadExtElem::Radicand radicand;
  std::vector<BiPoly> factors;

  TqAlgebra() {
    x = BiPoly::monomial(1, 1, 0);
    z = BiPoly::monomial(1, 0, 1);
    one = BiPoly::constant(1);
    const BiPoly two = BiPoly::constant(2);
    const BiPoly xz1 = x * z - one;
    N1 = two * z * (x * x * z + one) - x * (z * z + BiPoly::constant(4) * z - one);
    D = z * xz1 * xz1;
    e1 = RatFunc(N1, D);
    e2 = RatFunc((x - one) * (x - one), xz1 * xz1);
    Delta = N1 * N1 - BiPoly::constant(4) * z * z * (x - one) * (x - one) * xz1 * xz1;
    M = x * (z - one) * ((two * x - BiPoly::constant(3)) * z + one);
    radicand = std::make_shared<const RatFunc>(Delta);
    factors = {x, z, x - one, z - one, xz1, Delta};
  }

  RatFunc tidy(const RatFunc& f) const {
    RatFunc out = f;
    for (const auto& p : factors) out = out.cancel(p);
    return out;
  }
  QuadExtElem tidy(const QuadExtElem& e) const {
    return QuadExtElem(tidy(e.rational_part()), tidy(e.radical_part()), e.radicand());
  }

  QuadExtElem lift(const RatFunc& f) const { return QuadExtElem::rational(f, radicand); }
  QuadExtElem mul(const QuadExtElem& a, const QuadExtElem& b) const { return tidy(a * b); }
  QuadExtElem inv(const QuadExtElem& a) const { return tidy(a.inverse()); }
  QuadExtElem power(const QuadExtElem& a, int e) const {
    QuadExtElem acc = lift(RatFunc(one));
    for (int k = 0; k < e; ++k) acc = mul(acc, a);
    return acc;
  }

  // x_+ for sign = +1, x_- for sign = -1: (e1 +- delta) / 2.
  QuadExtElem x_branch(int sign) const {
    return QuadExtElem(e1 * RatFunc(BiPoly::constant(BigRat(1, 2))),
                       RatFunc(BiPoly::constant(BigRat(sign, 2)), D), radicand);
  }

  // f_+ for sign = +1, f_- for sign = -1.
  QuadExtElem f_branch(int sign) const {
    const QuadExtElem diff = x_branch(-1) - x_branch(+1);
    const QuadExtElem frac = mul(lift(RatFunc(M, BiPoly::constant(2) * D)), inv(diff));
    const QuadExtElem half = lift(RatFunc(BiPoly::constant(BigRat(1, 2))));
    return tidy(sign > 0 ? half + frac : half - frac);
  }

  // rho = (x_b - 1) / ((1 - z x_b) x)
  QuadExtElem rho_branch(int sign) const {
    const QuadExtElem xb = x_branch(sign);
    const QuadExtElem den = mul(lift(RatFunc(one)) - mul(lift(RatFunc(z)), xb), lift(RatFunc(x)));
    return mul(xb - lift(RatFunc(one)), inv(den));
  }

  // Horner evaluation of P at a quadratic-extension argument.
  QuadExtElem eval(const QPolynomial& p, const QuadExtElem& arg) const {
    QuadExtElem acc = lift(RatFunc(BiPoly::from_second(p.coeffs.back())));
    for (int k = p.n - 1; k >= 0; --k) {
      acc = mul(acc, arg) + lift(RatFunc(BiPoly::from_second(p.coeffs[static_cast<size_t>(k)])));
    }
    return tidy(acc);
  }
};

const TqAlgebra& algebra() {
  static const TqAlgebra a;
  return a;
}

nlohmann::json radical_residual(const QuadExtElem& e) {
  return to_json(e.radical_part().num());
}

}  // namespace

VerificationReport verify_TQ(int n) {
  VerificationReport rep;
  const std::string tag = "tq_algebraic[n=" + std::to_string(n) + "]";
  const TqAlgebra& a = algebra();
  rep.run(tag + ".discriminant", [&] {
    // e1^2 - 4 e2 = Delta / D^2
    const RatFunc disc = a.e1 * a.e1 - RatFunc(BiPoly::constant(4)) * a.e2;
    const bool ok = equivalent(disc, RatFunc(a.Delta, a.D * a.D));
    return Outcome{ok, "e1^2 - 4 e2 = Delta / D^2", {}};
  });
  rep.run(tag + ".relation", [&] {
    const QPolynomial& p = qpoly(n);
    const QuadExtElem zq = a.lift(RatFunc(a.z));
    const QuadExtElem term_plus =
        a.mul(a.mul(a.rho_branch(+1), a.power(a.f_branch(-1), 2 * n + 1)),
              a.eval(p, a.inv(a.mul(zq, a.x_branch(-1)))));
    const QuadExtElem term_minus =
        a.mul(a.mul(a.rho_branch(-1), a.power(a.f_branch(+1), 2 * n + 1)),
              a.eval(p, a.inv(a.mul(zq, a.x_branch(+1)))));
    const QuadExtElem sum = a.tidy(term_plus + term_minus);
    if (!sum.radical_part().is_zero()) {
      return Outcome{false, "radical part does not vanish", radical_residual(sum)};
    }
    const RatFunc diff = a.tidy(sum.rational_part() - RatFunc(p.poly));
    if (!diff.is_zero()) return Outcome{false, "rational part differs from P_n", to_json(diff.num())};
    return Outcome{true, "radical part 0, rational part = P_n", {}};
  });
  return rep;
}

namespace {

// Rows of the homogeneous system sum_k r_k (x^k - 2 Re[rho_+ f_-^(2n+1) Y^k]) = 0,
// one per power of x, with Y = 1/(z x_-).
Matrix<UniPoly> tq_system(int n) {
  const TqAlgebra& a = algebra();
  const QuadExtElem y = a.inv(a.mul(a.lift(RatFunc(a.z)), a.x_branch(-1)));
  QuadExtElem term = a.mul(a.rho_branch(+1), a.power(a.f_branch(-1), 2 * n + 1));
  std::vector<RatFunc> re;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) term = a.mul(term, y);
    re.push_back(term.rational_part());
  }
  BiPoly common = re.back().den();
  for (const auto& r : re) {
    if (!try_divexact(common, r.den())) common = common * r.den();
  }
  std::vector<BiPoly> cols;
  for (int k = 0; k <= n; ++k) {
    const RatFunc& r = re[static_cast<size_t>(k)];
    const BiPoly scale = divexact(common, r.den());
    cols.push_back(BiPoly::monomial(1, k, 0) * common - BiPoly::constant(2) * r.num() * scale);
  }
  int top = 0;
  for (const auto& c : cols) top = std::max(top, c.degree_first());
  Matrix<UniPoly> rows;
  for (int j = 0; j <= top; ++j) {
    std::vector<UniPoly> row;
    bool nonzero = false;
    for (const auto& c : cols) {
      row.push_back(c.coeff_first(j));
      nonzero = nonzero || !row.back().is_zero();
    }
    if (!nonzero) continue;
    UniPoly g;
    for (const auto& e : row) g = gcd(g, e);
    for (auto& e : row) e = divexact(e, g);
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<BigRat> specialize(const Matrix<UniPoly>& m, const BigRat& at) {
  Matrix<BigRat> out;
  for (const auto& row : m) {
    std::vector<BigRat> r;
    for (const auto& e : row) r.push_back(e(at));
    out.push_back(std::move(r));
  }
  return out;
}

// Indices of rows that are independent at z = at.
std::vector<size_t> independent_rows(const Matrix<UniPoly>& m, const BigRat& at) {
  const Matrix<BigRat> s = specialize(m, at);
  std::vector<size_t> chosen;
  Matrix<BigRat> acc;
  for (size_t i = 0; i < s.size(); ++i) {
    acc.push_back(s[i]);
    if (rank(acc) == acc.size()) {
      chosen.push_back(i);
    } else {
      acc.pop_back();
    }
  }
  return chosen;
}

const BigRat kProbeA = make_rat(7, 13);
const BigRat kProbeB = make_rat(-11, 17);

}  // namespace

int tq_nullspace_dimension(int n) {
  if (n == 0) return 1;
  const Matrix<UniPoly> m = tq_system(n);
  const size_t r = std::max(independent_rows(m, kProbeA).size(), independent_rows(m, kProbeB).size());
  return n + 1 - static_cast<int>(r);
}

QPolynomial compute_P_via_TQ(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
  if (n == 0) return make_qpolynomial(0, {UniPoly::constant(1)}, "tq-nullspace");
  const Matrix<UniPoly> m = tq_system(n);
  std::vector<size_t> rows_a = independent_rows(m, kProbeA);
  const std::vector<size_t> rows_b = independent_rows(m, kProbeB);
  if (rows_b.size() > rows_a.size()) rows_a = rows_b;
  const int dim = n + 1 - static_cast<int>(rows_a.size());
  if (dim != 1) {
    throw Error(ErrorCode::NullspaceDimension,
                "TQ system for n=" + std::to_string(n) + " has nullspace dimension " + std::to_string(dim));
  }
  Matrix<UniPoly> sub;
  for (size_t i : rows_a) sub.push_back(m[i]);
  const auto rref = fraction_free_rref(sub, UniPoly::constant(1));
  auto kernel = kernel_from_rref(rref, static_cast<size_t>(n) + 1);
  std::vector<UniPoly> v = kernel.at(0);
  for (const auto& row : m) {
    UniPoly dot;
    for (size_t k = 0; k < v.size(); ++k) dot += row[k] * v[k];
    if (!dot.is_zero()) {
      throw Error(ErrorCode::NullspaceDimension, "kernel vector fails a dependent row: " + dump(dot));
    }
  }
  UniPoly g;
  for (const auto& e : v) g = gcd(g, e);
  for (auto& e : v) e = divexact(e, g);
  const BigRat lead = v.back()(0);
  if (lead == 0) throw Error(ErrorCode::NullspaceDimension, "kernel vector has r_n(0) = 0");
  for (auto& e : v) e *= 1 / lead;
  return make_qpolynomial(n, std::move(v), "tq-nullspace");
}

Wronskian wronskian(int n) {
  Wronskian w;
  const std::string tag = "wronskian[n=" + std::to_string(n) + "]";
  const QPolynomial& p = qpoly(n);
  const UniPoly s = cached_s_family().at(n).with_var("z");
  const UniPoly pz = p_at_inverse_z(p);
  w.z_shift = n;
  w.cleared = -(s * pz);

  w.report.run(tag + ".identity", [&] {
    const TqAlgebra& a = algebra();
    const QuadExtElem xp = a.x_branch(+1), xm = a.x_branch(-1);
    const QuadExtElem zq = a.lift(RatFunc(a.z));
    const QuadExtElem base = a.lift(RatFunc(a.one - a.x));
    const QuadExtElem lin = a.lift(RatFunc(a.one - a.x * a.z));
    auto side = [&](const QuadExtElem& own, const QuadExtElem& other) {
      const QuadExtElem pre = a.mul(a.power(own, n), a.inv(base + a.mul(own, lin)));
      return a.mul(a.mul(pre, a.eval(p, other)), a.eval(p, a.inv(a.mul(zq, own))));
    };
    const QuadExtElem lhs = a.tidy(side(xm, xp) + side(xp, xm));
    if (!lhs.radical_part().is_zero()) {
      return Outcome{false, "radical part does not vanish", radical_residual(lhs)};
    }
    const QuadExtElem d = xp - xm;
    const RatFunc d2 = a.tidy(a.mul(d, d)).rational_part();
    const BiPoly xz1 = a.x * a.z - a.one;
    const RatFunc factor =
        a.tidy(RatFunc(a.z * xz1 * xz1, a.x * (a.z - a.one) * (a.z - a.one)) * d2);
    RatFunc wn(BiPoly::from_second(w.cleared), BiPoly::monomial(1, 0, n));
    RatFunc rhs = a.tidy(RatFunc(BiPoly::constant(1), a.x - a.one) * pow(factor, n) * wn);
    const RatFunc diff = a.tidy(lhs.rational_part() - rhs);
    if (!diff.is_zero()) return Outcome{false, "two sides differ", to_json(diff.num())};
    return Outcome{true, "", {}};
  });
  w.report.run(tag + ".p_at_one", [&] {
    const UniPoly lhs = p.poly.eval_first(1);
    const UniPoly rhs = s * pow(BigRat(4), n);
    const UniPoly diff = lhs - rhs;
    return Outcome{diff.is_zero(), "P_n(1,z) = 4^n s_n", diff.is_zero() ? nlohmann::json() : to_json(diff)};
  });
  w.report.run(tag + ".p_at_inverse_z", [&] {
    const UniPoly t = cached_tau_family(make_rat(2, 3)).at(n + 2).with_var("z");
    const UniPoly diff = pz - t * pow(make_rat(-4, 3), n);
    return Outcome{diff.is_zero(), "z^n P_n(1/z,z) = (-4/3)^n tau_{n+2}(z,2/3)",
                   diff.is_zero() ? nlohmann::json() : to_json(diff)};
  });
  w.report.run(tag + ".product_form", [&] {
    const UniPoly t1 = cached_tau_family(make_rat(1, 6)).at(n + 1).with_var("z");
    const UniPoly t2 = cached_tau_family(make_rat(2, 3)).at(n + 2).with_var("z");
    const UniPoly diff = w.cleared + t1 * t2 * pow(make_rat(-4, 3), n);
    return Outcome{diff.is_zero(), "z^n W_n = -(-4/3)^n tau_{n+1}(z,1/6) tau_{n+2}(z,2/3)",
                   diff.is_zero() ? nlohmann::json() : to_json(diff)};
  });
  return w;
}

}  // namespace xyzpoly
