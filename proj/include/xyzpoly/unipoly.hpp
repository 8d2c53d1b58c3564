#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xyzpoly/bigrat.hpp"

namespace xyzpoly {

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are indexed by power with trailing zeros trimmed, so the
/// zero polynomial has an empty coefficient vector and degree -1. The
/// variable tag is a label only: arithmetic never checks it and results take
/// the tag of the left operand.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRat> coeffs, std::string var = "z");

  static UniPoly constant(const BigRat& c, std::string var = "z");
  static UniPoly monomial(const BigRat& c, int power, std::string var = "z");
  /// a + b*var
  static UniPoly linear(const BigRat& a, const BigRat& b,
                        std::string var = "z");

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  BigRat coeff(int power) const;
  const BigRat& leading() const;
  const std::string& var() const { return var_; }
  UniPoly with_var(std::string var) const;

  BigRat operator()(const BigRat& at) const;
  UniPoly derivative() const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  UniPoly& operator*=(const BigRat& scalar);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const BigRat& s) { return a *= s; }
  friend UniPoly operator*(const BigRat& s, UniPoly a) { return a *= s; }
  UniPoly operator-() const;

  // Equality compares coefficients only.
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<BigRat> coeffs_;
  std::string var_ = "z";
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws NotDivisible carrying the remainder.
UniPoly divexact(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& divisor, const UniPoly& a);

UniPoly pow(const UniPoly& base, int exponent);
/// Monic gcd over the rationals; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Positive rational c such that p / c has coprime integer coefficients
/// (sign chosen so the leading coefficient of p / c is positive).
BigRat content(const UniPoly& p);
UniPoly primitive_part(const UniPoly& p);
bool has_integer_coeffs(const UniPoly& p);
bool has_nonnegative_coeffs(const UniPoly& p);

/// p(q(var))
UniPoly compose(const UniPoly& p, const UniPoly& q);
/// p(var^2)
UniPoly substitute_square(const UniPoly& p);
/// p(-var)
UniPoly reflect(const UniPoly& p);
/// var^weight * p(1/var); requires weight >= deg p.
UniPoly reverse(const UniPoly& p, int weight);
/// Splits p(var) = e(var^2) + var * o(var^2), returning {e, o}.
std::pair<UniPoly, UniPoly> even_odd_parts(const UniPoly& p);

/// Coefficients (alpha, beta, gamma, delta) of var -> (alpha var + beta) /
/// (gamma var + delta).
struct MobiusMap {
  BigRat alpha, beta, gamma, delta;
};

/// (gamma y + delta)^weight * p((alpha y + beta) / (gamma y + delta)).
/// Throws DegenerateMap when alpha delta - beta gamma = 0 and
/// InvalidArgument when weight < deg p.
UniPoly mobius_substitute(const UniPoly& p, const MobiusMap& map, int weight);

/// Unique polynomial of degree < samples.size() through all (x, y) samples.
/// Throws DuplicateAbscissa.
UniPoly interpolate(std::span<const std::pair<BigRat, BigRat>> samples,
                    std::string var = "z");

std::string to_string(const UniPoly& p);

}  // namespace xyzpoly
