#pragma once

#include "xyzpoly/bipoly.hpp"

namespace xyzpoly {

/// Quotient of bivariate polynomials.
///
/// The denominator is kept primitive over the integers with a positive
/// leading coefficient; scalar factors live in the numerator. There is no
/// bivariate gcd, so the representation is not reduced: callers that know a
/// common factor remove it with cancel(), and equality is decided by
/// cross-multiplication.
class RatFunc {
 public:
  RatFunc() : den_(BiPoly::constant(1)) {}
  RatFunc(BiPoly num);  // NOLINT(google-explicit-constructor): polynomials embed
  RatFunc(BiPoly num, BiPoly den);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc inverse() const;
  /// Divides numerator and denominator by factor as often as both allow.
  RatFunc cancel(const BiPoly& factor) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;

  /// Mathematical equality (cross-multiplied).
  friend bool equivalent(const RatFunc& a, const RatFunc& b);

 private:
  BiPoly num_;
  BiPoly den_;
};

RatFunc pow(const RatFunc& base, int exponent);

}  // namespace xyzpoly
