#pragma once

#include <map>
#include <vector>

#include "xyzpoly/bigrat.hpp"
#include "xyzpoly/unipoly.hpp"

namespace xyzpoly {

/// Coefficients of one step of a bilinear second-order recurrence
///   prefactor * t_{n+1} t_{n-1} = bracket * t_n^2
///       - 2z(z-1)(9z-1)^2 (t_n'' t_n - t_n'^2) - 2(3z-1)^2(9z-1) t_n' t_n
/// with n the middle index.
struct BilinearStep {
  BigRat prefactor;
  UniPoly bracket;
};

/// Right-hand side of the cleared recurrence for a given middle entry.
UniPoly bilinear_rhs(const UniPoly& t, const UniPoly& bracket);

/// Step coefficients of the tau recurrence at middle index n.
BilinearStep tau_step(const BigRat& xi, int n);
/// Step coefficients of the s recurrence at middle index n.
BilinearStep s_step(int n);

/// Memoized family t_n for integer n, grown from t_0, t_1 in both
/// directions. Every stored entry passed exact division.
class RecurrenceFamily {
 public:
  using StepFn = BilinearStep (*)(const BigRat&, int);

  RecurrenceFamily(BigRat param, StepFn step, UniPoly t0, UniPoly t1);

  const BigRat& param() const { return param_; }
  const std::map<int, UniPoly>& entries() const { return entries_; }
  /// Computes missing entries so that [n_min, n_max] is covered.
  void extend(int n_min, int n_max);
  const UniPoly& at(int n);
  bool contains(int n) const { return entries_.count(n) != 0; }

  /// Solves the step with middle index n for t_{n+1}.
  UniPoly next(int n) const;
  /// Solves the step with middle index n for t_{n-1}.
  UniPoly prev(int n) const;

 private:
  BigRat param_;
  StepFn step_;
  std::map<int, UniPoly> entries_;
};

/// tau_n(z, xi) with tau_0 = 1, tau_1 = -4 xi + 5/3.
RecurrenceFamily tau_family(const BigRat& xi);
/// s_n(z) with s_0 = s_1 = 1.
RecurrenceFamily s_family();

/// tau_{n+1} from entries n-1 and n of a tau family. Throws ZeroPrefactor
/// or PolynomialityViolation.
UniPoly tau_next(const RecurrenceFamily& family, int n);

/// s_n for n_min <= n <= n_max (n_min <= 0, n_max >= 1).
std::map<int, UniPoly> s_sequence(int n_min, int n_max);
/// tau_n(z, -1/3) for 0 <= n <= n_max.
std::vector<UniPoly> sbar_sequence(int n_max);

/// Degree bound floor(n(n-1)/4 + k/2).
int degree_bound(int n, int k);

/// Process-wide caches for the families used throughout the library.
/// Not thread-safe; accessed from a single thread in this code base.
RecurrenceFamily& cached_s_family();
RecurrenceFamily& cached_tau_family(const BigRat& xi);

}  // namespace xyzpoly
