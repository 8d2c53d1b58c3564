#pragma once

#include <map>
#include <string>

#include "xyzpoly/bigrat.hpp"
#include "xyzpoly/report.hpp"
#include "xyzpoly/unipoly.hpp"

namespace xyzpoly {

/// p_k, q_k (variable y) and c_k over a contiguous range of k.
struct PQFamily {
  std::map<int, UniPoly> p;
  std::map<int, UniPoly> q;
  std::map<int, BigRat> c;
  std::map<int, std::string> p_method;  // "gcd" or "factor"
};

/// c_k = 2^(-k(k+2)) for k >= 0, 2^(-k^2) (2/3)^(2k+1) for k < 0.
BigRat c_coefficient(int k);

/// F(y) = s_{2k+1}(y^2) / s_{2k+1}(0).
UniPoly odd_split_target(int k);

/// The factor p_k of F(y) = p_k(y) p_k(-y) fixed by the Mobius self-symmetry,
/// with p_k(0) = 1. Tries a gcd shortcut first and falls back to a full
/// factorization over the integers. `method` receives which path succeeded.
/// Throws SplitFailure or NonIntegerCoefficients.
UniPoly extract_p(int k, std::string* method = nullptr);
/// The factorization path alone (used as the fallback and tested on its own).
UniPoly extract_p_by_factoring(int k);

/// q_{k-1}(y) = s_{2k}(y^2) / [c_k (1+3y)^(k(k+1)) p_{-k-1}((y-1)/(1+3y))].
/// Throws NotDivisible or ParityViolation.
UniPoly extract_q(int k);

/// Memoized p_k and q_k.
const UniPoly& p_poly(int k);
const UniPoly& q_poly(int k);

PQFamily pq_family(int k_min, int k_max);

/// A_n(zeta) assembled from p and q (variable "zeta").
UniPoly alt_polynomial(int n);
/// prod_{k=0}^{n-1} (3k+1)! / (n+k)!
BigInt asm_count(int n);

/// Exact round trips of both factorizations, for k in [k_min, k_max].
VerificationReport check_factorizations(int k_min, int k_max);
/// Mobius self-symmetries of p_k and q_k, evenness of q_k, degrees, signs.
VerificationReport check_pq_symmetries(int k_min, int k_max);
/// p_n(1/3) and the leading coefficient of q_n for 0 <= n <= n_max,
/// A_n(0) against the ASM numbers for 1 <= n <= a_max.
VerificationReport special_values(int n_max, int a_max);

}  // namespace xyzpoly
