#include <map>
#include <memory>
#include <mutex>

#include "xyzpoly/errors.hpp"
#include "xyzpoly/linalg.hpp"
#include "xyzpoly/poly_json.hpp"
#include "xyzpoly/sos.hpp"

namespace xyzpoly {

namespace {

const BiPoly::Vars kVars = {"t", "s"};

BiPoly k(long c) { return BiPoly::constant(c, kVars); }

void require_even(int n) {
  if (n < 0 || n % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "the SOS kernel is defined for even n >= 0, got " + std::to_string(n));
  }
}

}  // namespace

UniPoly sos_p_next(const UniPoly& p_prev, const UniPoly& p, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "sos_p_next needs n >= 1");
  if (p_prev.is_zero()) throw Error(ErrorCode::ZeroPrefactor, "p_{n-1} is zero");
  const BigRat m(n);
  const UniPoly s = UniPoly::monomial(1, 1, "s");
  const UniPoly one = UniPoly::constant(1, "s");
  const UniPoly d1 = p.derivative(), d2 = d1.derivative();
  const UniPoly sm1 = s - one;
  const UniPoly w2 = s * sm1 * sm1 * (s + 2 * one) * (2 * s + one);
  const UniPoly w1 = sm1 * BigRat(2) * UniPoly({BigRat(-1), BigRat(-6), BigRat(-3), BigRat(1)}, "s");
  const UniPoly w0({13 * m * m + 29 * m + 12, 46 * m * m + 98 * m + 42, 22 * m * m + 35 * m + 18}, "s");
  const UniPoly rhs = w2 * (d2 * p - d1 * d1) + w1 * d1 * p + w0 * p * p;
  auto [q, r] = divmod(rhs, p_prev * (4 * (2 * m + 1) * (2 * m + 3)));
  if (!r.is_zero()) {
    throw PolynomialityViolation("SOS recurrence division fails at index " + std::to_string(n + 1), n + 1,
                                 dump(r));
  }
  return q.with_var("s");
}

const UniPoly& sos_p(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "sos_p needs n >= 0");
  static std::mutex mu;
  static std::vector<std::unique_ptr<UniPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) {
    cache.push_back(std::make_unique<UniPoly>(UniPoly::constant(1, "s")));
    cache.push_back(std::make_unique<UniPoly>(UniPoly::linear(1, 3, "s")));
  }
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size()) - 1;
    cache.push_back(std::make_unique<UniPoly>(sos_p_next(*cache[m - 1], *cache[m], m)));
  }
  return *cache[static_cast<size_t>(n)];
}

SosPdeCoefficients sos_pde_coefficients(int n) {
  const BiPoly t = BiPoly::monomial(1, 1, 0, kVars);
  const BiPoly s = BiPoly::monomial(1, 0, 1, kVars);
  const BiPoly one = k(1), N = k(n);
  const BiPoly t2 = t * t, t3 = t2 * t, t4 = t3 * t;
  const BiPoly s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  const BiPoly sp2 = s + k(2), s2p1 = one + k(2) * s;

  SosPdeCoefficients c;
  c.A = k(2) * t * (one - t) * (s2p1 - t) * (s + k(2) * s2 - k(2) * t - s * t) * (k(2) * t + s * t - s);
  c.B = -k(4) * sp2 * sp2 * t4 -
        k(4) * sp2 * (-k(2) * s2 + s2 * N + k(3) * s * N - k(5) * s - k(3) + N) * t3 +
        (k(40) * s * N + k(8) * s4 * N + k(40) * s3 * N + k(60) * s2 * N + k(8) * N - k(8) * s4 -
         k(60) * s2 - k(8) - k(44) * s3 - k(36) * s) *
            t2 -
        k(4) * s2p1 * s * (-s2 + k(3) * s2 * N + k(5) * s * N - k(3) * s + k(3) * N - k(2)) * t +
        k(4) * N * s2 * s2p1 * s2p1;
  c.C = k(2) * N * sp2 * sp2 * (one + N) * t3 - k(4) * N * sp2 * (one + s) * (one + s) * (one + N) * t2 +
        N * s *
            (k(8) * s3 + k(4) * s3 * N + k(26) * s2 + k(15) * s2 * N + k(18) * s + k(18) * s * N + k(2) +
             k(5) * N) *
            t -
        k(4) * N * s2p1 * s * (s + s * N + one);
  c.T = k(4) * (one - s2) * s * sp2 * s2p1 * t;
  return c;
}

BiPoly sos_pde_residual(const SosPdeCoefficients& pde, const BiPoly& p) {
  const BiPoly pt = p.d_first();
  return pde.A * pt.d_first() + pde.B * pt + pde.C * p + pde.T * p.d_second();
}

int sos_bridge_exponent_1(int n) { return n * n / 4 - n / 2; }
int sos_bridge_exponent_2(int n) { return (n - 1) * (n - 1) / 4; }

namespace {

// Columns are the monomials t^i s^j with i <= cap_t, j <= cap_s; rows are
// the monomials of the residual.
std::vector<std::vector<BigInt>> ansatz_kernel(int n, int cap_t, int cap_s) {
  const SosPdeCoefficients pde = sos_pde_coefficients(n);
  std::map<BiPoly::Exponent, size_t> row_of;
  std::vector<BiPoly> images;
  for (int i = 0; i <= cap_t; ++i) {
    for (int j = 0; j <= cap_s; ++j) {
      images.push_back(sos_pde_residual(pde, BiPoly::monomial(1, i, j, kVars)));
      for (const auto& [e, v] : images.back().terms()) row_of.emplace(e, row_of.size());
    }
  }
  Matrix<BigRat> a(row_of.size(), std::vector<BigRat>(images.size()));
  for (size_t col = 0; col < images.size(); ++col) {
    for (const auto& [e, v] : images[col].terms()) a[row_of.at(e)][col] = v;
  }
  return nullspace(a, images.size());
}

BiPoly from_kernel(const std::vector<BigInt>& v, int cap_s) {
  BiPoly::Terms terms;
  for (size_t col = 0; col < v.size(); ++col) {
    if (v[col] == 0) continue;
    const int i = static_cast<int>(col) / (cap_s + 1), j = static_cast<int>(col) % (cap_s + 1);
    terms.emplace(BiPoly::Exponent{i, j}, BigRat(v[col]));
  }
  BiPoly p(std::move(terms), kVars);
  if (p.leading_coeff() < 0) p *= BigRat(-1);
  return p;
}

}  // namespace

int sos_kernel_dimension(int n, int cap_t, int cap_s) {
  require_even(n);
  if (cap_t < 0 || cap_s < 0) return 0;
  return static_cast<int>(ansatz_kernel(n, cap_t, cap_s).size());
}

SosKernel sos_P_kernel(int n, int max_retries) {
  require_even(n);
  SosKernel out;
  out.n = n;
  int cap_t = n;
  int cap_s = std::max(0, sos_p(n).degree() - sos_bridge_exponent_1(n) - sos_bridge_exponent_2(n));
  for (int attempt = 0; attempt <= max_retries; ++attempt, cap_t += 2, cap_s += 2) {
    const auto kernel = ansatz_kernel(n, cap_t, cap_s);
    out.attempts.push_back({cap_t, cap_s, static_cast<int>(kernel.size())});
    if (kernel.empty()) continue;
    if (kernel.size() > 1) {
      throw Error(ErrorCode::NullspaceDimension, "SOS ansatz for n = " + std::to_string(n) + " has a " +
                                                     std::to_string(kernel.size()) +
                                                     "-dimensional nullspace at caps (" + std::to_string(cap_t) +
                                                     ", " + std::to_string(cap_s) + ")");
    }
    out.P = from_kernel(kernel[0], cap_s);
    out.cap_t = cap_t;
    out.cap_s = cap_s;
    return out;
  }
  throw Error(ErrorCode::NoSolution, "no polynomial solution for n = " + std::to_string(n) + " up to caps (" +
                                         std::to_string(cap_t - 2) + ", " + std::to_string(cap_s - 2) + ")");
}

UniPoly sos_bridge_image(const BiPoly& P, int n) {
  const UniPoly u = UniPoly::linear(1, 2, "s");
  const UniPoly s = UniPoly::monomial(1, 1, "s");
  UniPoly image({}, "s");
  for (const auto& [e, c] : P.terms()) image += pow(u, e.first) * pow(s, e.second) * c;
  return pow(u, sos_bridge_exponent_1(n)) * pow(UniPoly::linear(1, make_rat(1, 2), "s"), sos_bridge_exponent_2(n)) *
         image;
}

BigRat sos_bridge_scale(const BiPoly& P, int n) {
  const UniPoly image = sos_bridge_image(P, n);
  const UniPoly& target = sos_p(n);
  if (image.is_zero() || image.degree() != target.degree()) {
    throw Error(ErrorCode::InvalidArgument, "bridge degree mismatch at n = " + std::to_string(n));
  }
  const BigRat scale = target.leading() / image.leading();
  const UniPoly diff = target - image * scale;
  if (!diff.is_zero()) throw Error(ErrorCode::InvalidArgument, "bridge mismatch beyond scale: " + dump(diff));
  return scale;
}

VerificationReport sos_bridge_check(int n) {
  VerificationReport rep;
  rep.run("sos.bridge[n=" + std::to_string(n) + "]", [n] {
    const SosKernel kernel = sos_P_kernel(n);
    const UniPoly image = sos_bridge_image(kernel.P, n);
    const UniPoly& target = sos_p(n);
    if (image.degree() != target.degree()) {
      return Outcome{false, "degree mismatch", {{"image", to_json(image)}, {"p", to_json(target)}}};
    }
    const BigRat scale = target.leading() / image.leading();
    const UniPoly diff = target - image * scale;
    return Outcome{diff.is_zero(), "scale " + scale.get_str(), diff.is_zero() ? nlohmann::json() : to_json(diff)};
  });
  return rep;
}

SosFamily sos_family(int p_max, const std::vector<int>& P_list) {
  SosFamily f;
  for (int n = 0; n <= p_max; ++n) f.p_sos.emplace(n, sos_p(n));
  for (int n : P_list) {
    const BiPoly P = sos_P_kernel(n).P;
    const BigRat scale = sos_bridge_scale(P, n);
    f.P_sos.emplace(n, P * scale);
    f.scale.emplace(n, scale);
  }
  return f;
}

VerificationReport verify_sos(int p_max, const std::vector<int>& P_list) {
  VerificationReport rep;
  for (int n = 2; n <= p_max; ++n) {
    rep.run("sos.p[n=" + std::to_string(n) + "]", [n] {
      const UniPoly& p = sos_p(n);
      return Outcome{p.coeff(0) == 1, "degree " + std::to_string(p.degree()), {}};
    });
  }
  for (int n : P_list) {
    rep.run("sos.P_kernel[n=" + std::to_string(n) + "]", [n] {
      const SosKernel kernel = sos_P_kernel(n);
      const bool zero = sos_pde_residual(sos_pde_coefficients(n), kernel.P).is_zero();
      return Outcome{zero, "1-dimensional at caps (" + std::to_string(kernel.cap_t) + ", " +
                               std::to_string(kernel.cap_s) + "), degrees (" +
                               std::to_string(kernel.P.degree_first()) + ", " +
                               std::to_string(kernel.P.degree_second()) + ")",
                     {}};
    });
    rep.append(sos_bridge_check(n));
  }
  return rep;
}

}  // namespace xyzpoly
