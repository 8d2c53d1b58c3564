#pragma once

#include <string>
#include <vector>

#include "xyzpoly/bipoly.hpp"
#include "xyzpoly/report.hpp"
#include "xyzpoly/unipoly.hpp"

namespace xyzpoly {

/// P_n(x, z) = sum_k r_k(z) x^k.
struct QPolynomial {
  int n = 0;
  BiPoly poly;
  std::vector<UniPoly> coeffs;  // r_0 .. r_n
  std::string method;           // "pde", "tq-nullspace" or "tq-nullspace (pde pivot vanished)"
};

QPolynomial make_qpolynomial(int n, std::vector<UniPoly> coeffs, std::string method);

/// Operator coefficients of the second-order PDE in (x, z) annihilating P_n:
///   (A d_x^2 + B_n d_x + C_n + T d_z) P_n = 0.
struct PdeCoefficients {
  BiPoly A, B, C, T;
};

PdeCoefficients pde_coefficients(int n);
/// Applies the operator to p.
BiPoly pde_residual(const PdeCoefficients& pde, const BiPoly& p);

/// Descending solve of the PDE seeded with r_n = s_n. Throws
/// TruncationFailure when the low-order relations are not satisfied and
/// PolynomialityViolation when a pivot division is not exact.
QPolynomial compute_P(int n);

/// Nullspace solve of the algebraic TQ relation. Throws NullspaceDimension.
QPolynomial compute_P_via_TQ(int n);

/// Dimension of the TQ nullspace over Q(z), from ranks at random points.
int tq_nullspace_dimension(int n);

/// Cached compute_P.
const QPolynomial& qpoly(int n);

/// Invariants: r_n(0) = 1, nonnegative integer coefficients, degree bound.
VerificationReport check_qpoly_invariants(const QPolynomial& p);

/// The algebraic TQ relation in the quadratic extension.
VerificationReport verify_TQ(int n);
/// Closed form of r_0 in terms of P_n and d_x P_n at x = 1/z.
VerificationReport verify_r0_relation(int n);

/// z^n P_n(1/z, z), a polynomial with nonzero constant term.
UniPoly p_at_inverse_z(const QPolynomial& p);

struct Wronskian {
  UniPoly cleared;     // z^shift * W_n(z)
  int z_shift = 0;
  VerificationReport report;
};

/// W_n(z) = -s_n(z) P_n(1/z, z) together with the full Wronskian identity,
/// P_n(1, z) = 4^n s_n, the tau-value of P_n(1/z, z) and the product form.
Wronskian wronskian(int n);

}  // namespace xyzpoly
