#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "xyzpoly/bigrat.hpp"
#include "xyzpoly/unipoly.hpp"

namespace xyzpoly {

template <class T>
using Matrix = std::vector<std::vector<T>>;

inline bool ring_is_zero(const BigInt& a) { return a == 0; }
inline bool ring_is_zero(const UniPoly& a) { return a.is_zero(); }
inline BigInt ring_divexact(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline UniPoly ring_divexact(const UniPoly& a, const UniPoly& b) { return divexact(a, b); }

template <class T>
struct RrefResult {
  Matrix<T> rows;           // rows[i][pivots[i]] == scale, zero in other pivot columns
  std::vector<int> pivots;  // pivot column of each nonzero row
  T scale;                  // last pivot (a maximal minor up to sign)
};

/// Fraction-free Gauss-Jordan elimination over an integral domain. Every
/// division by the previous pivot is exact, so entries stay minors of the
/// input. Zero rows are dropped from the result.
template <class T>
RrefResult<T> fraction_free_rref(Matrix<T> a, const T& one) {
  const size_t m = a.size();
  const size_t ncols = m == 0 ? 0 : a[0].size();
  T prev = one;
  std::vector<int> pivots;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < m; ++c) {
    size_t piv = m;
    for (size_t i = r; i < m; ++i) {
      if (!ring_is_zero(a[i][c])) {
        piv = i;
        break;
      }
    }
    if (piv == m) continue;
    std::swap(a[r], a[piv]);
    const T p = a[r][c];
    for (size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      const T f = a[i][c];
      const bool has_f = !ring_is_zero(f);
      for (size_t j = 0; j < ncols; ++j) {
        if (j == c) continue;
        if (ring_is_zero(a[i][j]) && (!has_f || ring_is_zero(a[r][j]))) continue;
        T v = p * a[i][j];
        if (has_f && !ring_is_zero(a[r][j])) v = v - f * a[r][j];
        a[i][j] = ring_divexact(v, prev);
      }
      a[i][c] = T{};
    }
    pivots.push_back(static_cast<int>(c));
    prev = p;
    ++r;
  }
  a.resize(r);
  return RrefResult<T>{std::move(a), std::move(pivots), prev};
}

/// Kernel basis from a fraction-free RREF: one vector per free column.
template <class T>
std::vector<std::vector<T>> kernel_from_rref(const RrefResult<T>& rref, size_t ncols) {
  std::vector<char> is_pivot(ncols, 0);
  for (int p : rref.pivots) is_pivot[static_cast<size_t>(p)] = 1;
  std::vector<std::vector<T>> basis;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(ncols);
    v[f] = rref.scale;
    for (size_t i = 0; i < rref.pivots.size(); ++i) {
      v[static_cast<size_t>(rref.pivots[i])] = T{} - rref.rows[i][f];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Integer kernel basis of a rational matrix, each vector primitive.
std::vector<std::vector<BigInt>> nullspace(const Matrix<BigRat>& a, size_t ncols);
std::vector<std::vector<BigInt>> nullspace(const Matrix<BigInt>& a, size_t ncols);

/// Divides an integer vector by the gcd of its entries (sign of the first
/// nonzero entry made positive).
void make_primitive(std::vector<BigInt>& v);

/// Rank of a rational matrix.
size_t rank(const Matrix<BigRat>& a);

/// (a, b) with b * f = a mod m, deg a <= num_degree, deg b < deg m - num_degree,
/// b monic; nullopt when the pair found has b sharing a factor with m.
std::optional<std::pair<UniPoly, UniPoly>> rational_reconstruct(const UniPoly& f, const UniPoly& m,
                                                                int num_degree);

}  // namespace xyzpoly
