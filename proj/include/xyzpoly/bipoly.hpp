#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "xyzpoly/bigrat.hpp"
#include "xyzpoly/unipoly.hpp"

namespace xyzpoly {

/// Sparse bivariate polynomial: exponent pair (first, second) to coefficient.
///
/// No zero coefficients are stored. Terms are ordered lexicographically with
/// the first variable major, which is also the monomial order used by exact
/// division.
class BiPoly {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, BigRat>;
  using Vars = std::array<std::string, 2>;

  BiPoly() = default;
  explicit BiPoly(Terms terms, Vars vars = {"x", "z"});

  static BiPoly constant(const BigRat& c, Vars vars = {"x", "z"});
  static BiPoly monomial(const BigRat& c, int first, int second,
                         Vars vars = {"x", "z"});
  /// p(second variable), constant in the first.
  static BiPoly from_second(const UniPoly& p, Vars vars = {"x", "z"});
  /// p(first variable), constant in the second.
  static BiPoly from_first(const UniPoly& p, Vars vars = {"x", "z"});
  /// sum_k coeffs[k](second) * first^k
  static BiPoly from_coefficients(std::span<const UniPoly> coeffs,
                                  Vars vars = {"x", "z"});

  const Terms& terms() const { return terms_; }
  const Vars& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  size_t size() const { return terms_.size(); }
  int degree_first() const;
  int degree_second() const;
  int min_degree_first() const;
  int min_degree_second() const;
  BigRat coeff(int first, int second) const;
  const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
  const BigRat& leading_coeff() const { return terms_.rbegin()->second; }

  /// Coefficient of first^power as a polynomial in the second variable.
  UniPoly coeff_first(int power) const;
  /// Coefficient of second^power as a polynomial in the first variable.
  UniPoly coeff_second(int power) const;
  UniPoly eval_first(const BigRat& value) const;
  UniPoly eval_second(const BigRat& value) const;
  BigRat operator()(const BigRat& first, const BigRat& second) const;

  BiPoly d_first() const;
  BiPoly d_second() const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BigRat& scalar);
  BiPoly& operator*=(const BiPoly& other);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const BigRat& s) { return a *= s; }
  friend BiPoly operator*(const BigRat& s, BiPoly a) { return a *= s; }
  BiPoly operator-() const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
  Vars vars_ = {"x", "z"};
};

BiPoly pow(const BiPoly& base, int exponent);

/// Exact quotient when b divides a, std::nullopt otherwise.
std::optional<BiPoly> try_divexact(const BiPoly& a, const BiPoly& b);
/// Exact quotient; throws NotDivisible carrying the partial remainder.
BiPoly divexact(const BiPoly& a, const BiPoly& b);

/// Positive-leading rational c with p / c primitive over the integers.
BigRat content(const BiPoly& p);
BiPoly primitive_part(const BiPoly& p);
bool has_integer_coeffs(const BiPoly& p);
bool has_nonnegative_coeffs(const BiPoly& p);

std::string to_string(const BiPoly& p);

}  // namespace xyzpoly
