#include "xyzpoly/quadext.hpp"

#include "xyzpoly/errors.hpp"

namespace xyzpoly {

namespace {

const QuadExtElem::Radicand& common(const QuadExtElem& a, const QuadExtElem& b) {
  if (a.radicand() != b.radicand() && !equivalent(*a.radicand(), *b.radicand())) {
    throw Error(ErrorCode::InvalidArgument, "quadratic extension elements with different radicands");
  }
  return a.radicand();
}

}  // namespace

QuadExtElem::QuadExtElem(RatFunc rational, RatFunc radical, Radicand radicand)
    : u_(std::move(rational)), v_(std::move(radical)), radicand_(std::move(radicand)) {
  if (!radicand_) throw Error(ErrorCode::InvalidArgument, "missing radicand");
}

QuadExtElem QuadExtElem::rational(RatFunc u, Radicand radicand) {
  return QuadExtElem(std::move(u), RatFunc(BiPoly()), std::move(radicand));
}

QuadExtElem QuadExtElem::generator(Radicand radicand) {
  return QuadExtElem(RatFunc(BiPoly()), RatFunc(BiPoly::constant(1)), std::move(radicand));
}

QuadExtElem QuadExtElem::conj() const { return QuadExtElem(u_, -v_, radicand_); }

RatFunc QuadExtElem::norm() const { return u_ * u_ - v_ * v_ * *radicand_; }

QuadExtElem QuadExtElem::inverse() const {
  const RatFunc n = norm();
  if (n.is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of a zero divisor");
  const RatFunc inv = n.inverse();
  return QuadExtElem(u_ * inv, -(v_ * inv), radicand_);
}

QuadExtElem operator+(const QuadExtElem& a, const QuadExtElem& b) {
  const auto& r = common(a, b);
  return QuadExtElem(a.u_ + b.u_, a.v_ + b.v_, r);
}

QuadExtElem operator-(const QuadExtElem& a, const QuadExtElem& b) {
  const auto& r = common(a, b);
  return QuadExtElem(a.u_ - b.u_, a.v_ - b.v_, r);
}

QuadExtElem operator*(const QuadExtElem& a, const QuadExtElem& b) {
  const auto& r = common(a, b);
  RatFunc u = a.u_ * b.u_;
  if (!a.v_.is_zero() && !b.v_.is_zero()) u = u + a.v_ * b.v_ * *r;
  RatFunc v = a.u_ * b.v_ + a.v_ * b.u_;
  return QuadExtElem(std::move(u), std::move(v), r);
}

QuadExtElem operator*(const QuadExtElem& a, const RatFunc& s) {
  return QuadExtElem(a.u_ * s, a.v_ * s, a.radicand_);
}

QuadExtElem QuadExtElem::operator-() const { return QuadExtElem(-u_, -v_, radicand_); }

QuadExtElem pow(const QuadExtElem& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  QuadExtElem result = QuadExtElem::rational(RatFunc(BiPoly::constant(1)), base.radicand());
  for (int k = 0; k < exponent; ++k) result = result * base;
  return result;
}

}  // namespace xyzpoly
