#pragma once

#include <map>
#include <vector>

#include "xyzpoly/bigrat.hpp"
#include "xyzpoly/bipoly.hpp"
#include "xyzpoly/report.hpp"
#include "xyzpoly/unipoly.hpp"

namespace xyzpoly {

/// One step of the bilinear SOS recurrence, solved for p_{n+1} (variable s):
///   4(2n+1)(2n+3) p_{n+1} p_{n-1} = s(s-1)^2(s+2)(2s+1)(p'' p - p'^2)
///       + 2(s-1)(s^3-3s^2-6s-1) p' p + [(22n^2+35n+18)s^2 + (46n^2+98n+42)s
///       + 13n^2+29n+12] p^2
/// Throws PolynomialityViolation when the division is not exact.
UniPoly sos_p_next(const UniPoly& p_prev, const UniPoly& p, int n);

/// p_0 = 1, p_1 = 1 + 3s, then the recurrence; memoized.
const UniPoly& sos_p(int n);

/// Operator (A d_t^2 + B_n d_t + C_n + T d_s) in the variables (t, s).
struct SosPdeCoefficients {
  BiPoly A, B, C, T;
};

SosPdeCoefficients sos_pde_coefficients(int n);
BiPoly sos_pde_residual(const SosPdeCoefficients& pde, const BiPoly& p);

/// Exponents of (1+2s) and (1+s/2) in the bridge to the one-variable polynomials.
int sos_bridge_exponent_1(int n);
int sos_bridge_exponent_2(int n);

struct SosKernelAttempt {
  int cap_t, cap_s;
  int dimension;
};

struct SosKernel {
  int n = 0;
  BiPoly P;  // primitive integer, positive leading coefficient
  int cap_t = 0, cap_s = 0;
  std::vector<SosKernelAttempt> attempts;
};

/// Polynomial solution of the PDE for even n by a coefficient ansatz with
/// degree caps starting at (n, deg p_n - e1 - e2) and growing by 2 per
/// retry. Throws NoSolution, NullspaceDimension, or InvalidArgument for odd n.
SosKernel sos_P_kernel(int n, int max_retries = 3);

/// Nullspace dimension of the ansatz at fixed caps.
int sos_kernel_dimension(int n, int cap_t, int cap_s);

/// (1+2s)^e1 (1+s/2)^e2 P(1+2s, s).
UniPoly sos_bridge_image(const BiPoly& P, int n);

/// Bridge scale lambda with p_n = lambda * sos_bridge_image(P, n); throws
/// InvalidArgument when the two sides are not proportional.
BigRat sos_bridge_scale(const BiPoly& P, int n);

/// Proportionality of p_n with the bridge image of the kernel, scale reported.
VerificationReport sos_bridge_check(int n);

struct SosFamily {
  std::map<int, UniPoly> p_sos;
  std::map<int, BiPoly> P_sos;  // kernel times the bridge scale
  std::map<int, BigRat> scale;
};

SosFamily sos_family(int p_max, const std::vector<int>& P_list);

/// p_n for n <= p_max by exact division, the kernel for each even n in
/// P_list, and the bridge for each kernel.
VerificationReport verify_sos(int p_max, const std::vector<int>& P_list);

}  // namespace xyzpoly
