#pragma once

#include <memory>

#include "xyzpoly/ratfunc.hpp"

namespace xyzpoly {

/// u + v * delta with delta^2 = radicand, over bivariate rational functions.
///
/// The radicand is shared between all elements derived from one another;
/// combining elements whose radicands differ throws InvalidArgument.
class QuadExtElem {
 public:
  using Radicand = std::shared_ptr<const RatFunc>;

  QuadExtElem(RatFunc rational, RatFunc radical, Radicand radicand);
  static QuadExtElem rational(RatFunc u, Radicand radicand);
  /// The element delta itself.
  static QuadExtElem generator(Radicand radicand);

  const RatFunc& rational_part() const { return u_; }
  const RatFunc& radical_part() const { return v_; }
  const Radicand& radicand() const { return radicand_; }

  /// u - v delta
  QuadExtElem conj() const;
  /// u^2 - v^2 delta^2
  RatFunc norm() const;
  QuadExtElem inverse() const;

  friend QuadExtElem operator+(const QuadExtElem& a, const QuadExtElem& b);
  friend QuadExtElem operator-(const QuadExtElem& a, const QuadExtElem& b);
  friend QuadExtElem operator*(const QuadExtElem& a, const QuadExtElem& b);
  friend QuadExtElem operator*(const QuadExtElem& a, const RatFunc& s);
  QuadExtElem operator-() const;

 private:
  RatFunc u_;
  RatFunc v_;
  Radicand radicand_;
};

QuadExtElem pow(const QuadExtElem& base, int exponent);

}  // namespace xyzpoly
