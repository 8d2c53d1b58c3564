#include "xyzpoly/ratfunc.hpp"

#include "xyzpoly/errors.hpp"

namespace xyzpoly {

RatFunc::RatFunc(BiPoly num) : num_(std::move(num)), den_(BiPoly::constant(1, num_.vars())) {}

RatFunc::RatFunc(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (num_.is_zero()) {
    den_ = BiPoly::constant(1, den_.vars());
    return;
  }
  const BigRat c = content(den_);
  if (c != 1) {
    const BigRat inv = 1 / c;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::cancel(const BiPoly& factor) const {
  if (factor.is_constant()) return *this;
  BiPoly n = num_;
  BiPoly d = den_;
  while (true) {
    auto qd = try_divexact(d, factor);
    if (!qd) break;
    auto qn = try_divexact(n, factor);
    if (!qn) break;
    n = std::move(*qn);
    d = std::move(*qd);
  }
  return RatFunc(std::move(n), std::move(d));
}

namespace {

RatFunc combine(const RatFunc& a, const RatFunc& b, bool subtract) {
  auto join = [subtract](BiPoly lhs, const BiPoly& rhs) {
    return subtract ? lhs - rhs : lhs + rhs;
  };
  if (a.is_zero()) return subtract ? -b : b;
  if (b.is_zero()) return a;
  if (a.den() == b.den()) return RatFunc(join(a.num(), b.num()), a.den());
  // One denominator dividing the other is the common case for the
  // structured expressions built in this library.
  if (b.den().size() >= a.den().size()) {
    if (auto q = try_divexact(b.den(), a.den())) {
      return RatFunc(join(a.num() * *q, b.num()), b.den());
    }
  } else if (auto q = try_divexact(a.den(), b.den())) {
    return RatFunc(join(a.num(), b.num() * *q), a.den());
  }
  return RatFunc(join(a.num() * b.den(), b.num() * a.den()), a.den() * b.den());
}

}  // namespace

RatFunc operator+(const RatFunc& a, const RatFunc& b) { return combine(a, b, false); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return combine(a, b, true); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(BiPoly({}, a.num().vars()));
  if (a.den().is_constant()) return RatFunc(a.num() * b.num(), b.den());
  if (b.den().is_constant()) return RatFunc(a.num() * b.num(), a.den());
  return RatFunc(a.num() * b.num(), a.den() * b.den());
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero rational function");
  if (a.den() == b.den()) {
    if (auto q = try_divexact(a.num(), b.num())) return RatFunc(std::move(*q));
    return RatFunc(a.num(), b.num());
  }
  return a * b.inverse();
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

bool equivalent(const RatFunc& a, const RatFunc& b) {
  if (a.den() == b.den()) return a.num() == b.num();
  return a.num() * b.den() == b.num() * a.den();
}

RatFunc pow(const RatFunc& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  return RatFunc(pow(base.num(), exponent), pow(base.den(), exponent));
}

}  // namespace xyzpoly
