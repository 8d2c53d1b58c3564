#include "xyzpoly/linalg.hpp"

namespace xyzpoly {

void make_primitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  if (g == 0) return;
  for (const auto& e : v) {
    if (e != 0) {
      if (e < 0) g = -g;
      break;
    }
  }
  for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
}

namespace {

Matrix<BigInt> clear_rows(const Matrix<BigRat>& a) {
  Matrix<BigInt> out;
  out.reserve(a.size());
  for (const auto& row : a) {
    BigInt l = 1;
    for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
    std::vector<BigInt> r;
    r.reserve(row.size());
    for (const auto& e : row) r.push_back(e.get_num() * (l / e.get_den()));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<std::vector<BigInt>> nullspace(const Matrix<BigInt>& a, size_t ncols) {
  if (a.empty()) {
    std::vector<std::vector<BigInt>> basis;
    for (size_t f = 0; f < ncols; ++f) {
      std::vector<BigInt> v(ncols);
      v[f] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  auto rref = fraction_free_rref(a, BigInt(1));
  auto basis = kernel_from_rref(rref, ncols);
  for (auto& v : basis) make_primitive(v);
  return basis;
}

std::vector<std::vector<BigInt>> nullspace(const Matrix<BigRat>& a, size_t ncols) {
  return nullspace(clear_rows(a), ncols);
}

size_t rank(const Matrix<BigRat>& a) {
  if (a.empty()) return 0;
  return fraction_free_rref(clear_rows(a), BigInt(1)).pivots.size();
}

std::optional<std::pair<UniPoly, UniPoly>> rational_reconstruct(const UniPoly& f, const UniPoly& m,
                                                                int num_degree) {
  UniPoly r0 = m;
  UniPoly r1 = divmod(f, m).remainder;
  UniPoly t0({}, f.var());
  UniPoly t1 = UniPoly::constant(1, f.var());
  while (r1.degree() > num_degree) {
    auto [q, r] = divmod(r0, r1);
    UniPoly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (t1.is_zero() || t1.degree() >= m.degree() - num_degree) return std::nullopt;
  if (gcd(t1, m).degree() > 0) return std::nullopt;
  const BigRat lc = 1 / t1.leading();
  return std::make_pair(r1 * lc, t1 * lc);
}

}  // namespace xyzpoly
