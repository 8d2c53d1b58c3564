#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace xyzpoly {

// GMP keeps mpq_class canonical (reduced, positive denominator, 0 = 0/1)
// after every arithmetic operation; parse_rational canonicalizes input.
using BigInt = mpz_class;
using BigRat = mpq_class;

/// n / d in canonical form (mpq_class(n, d) alone does not reduce).
inline BigRat make_rat(long n, long d) {
  BigRat r(n, d);
  r.canonicalize();
  return r;
}

BigRat parse_rational(std::string_view text);
std::string to_string(const BigRat& value);
std::string to_string(const BigInt& value);

inline bool is_integer(const BigRat& value) {
  return value.get_den() == 1;
}

BigRat pow(const BigRat& base, long exponent);
BigInt factorial(unsigned long n);

}  // namespace xyzpoly
