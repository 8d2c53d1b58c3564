#include "xyzpoly/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "xyzpoly/errors.hpp"
#include "xyzpoly/poly_json.hpp"

namespace xyzpoly {

UniPoly::UniPoly(std::vector<BigRat> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

UniPoly UniPoly::constant(const BigRat& c, std::string var) {
  return UniPoly({c}, std::move(var));
}

UniPoly UniPoly::monomial(const BigRat& c, int power, std::string var) {
  if (power < 0) throw Error(ErrorCode::InvalidArgument, "negative power");
  std::vector<BigRat> coeffs(static_cast<size_t>(power) + 1);
  coeffs.back() = c;
  return UniPoly(std::move(coeffs), std::move(var));
}

UniPoly UniPoly::linear(const BigRat& a, const BigRat& b, std::string var) {
  return UniPoly({a, b}, std::move(var));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRat UniPoly::coeff(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<size_t>(power)];
}

const BigRat& UniPoly::leading() const {
  static const BigRat zero = 0;
  return coeffs_.empty() ? zero : coeffs_.back();
}

UniPoly UniPoly::with_var(std::string var) const {
  UniPoly out = *this;
  out.var_ = std::move(var);
  return out;
}

BigRat UniPoly::operator()(const BigRat& at) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly({}, var_);
  std::vector<BigRat> out(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = coeffs_[k] * static_cast<long>(k);
  }
  return UniPoly(std::move(out), var_);
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
  std::vector<BigRat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  BigRat tmp;
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  return UniPoly(std::move(out), a.var_);
}

UniPoly& UniPoly::operator*=(const UniPoly& other) {
  *this = *this * other;
  return *this;
}

UniPoly& UniPoly::operator*=(const BigRat& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  std::vector<BigRat> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UniPoly({}, a.var()), a};
  std::vector<BigRat> quot(static_cast<size_t>(da - db + 1));
  const BigRat inv_lead = 1 / b.leading();
  BigRat tmp;
  for (int k = da - db; k >= 0; --k) {
    const BigRat& top = rem[static_cast<size_t>(k + db)];
    if (top == 0) continue;
    BigRat q = top * inv_lead;
    for (int j = 0; j <= db; ++j) {
      mpq_mul(tmp.get_mpq_t(), q.get_mpq_t(), b.coeffs()[static_cast<size_t>(j)].get_mpq_t());
      rem[static_cast<size_t>(k + j)] -= tmp;
    }
    quot[static_cast<size_t>(k)] = std::move(q);
  }
  return {UniPoly(std::move(quot), a.var()), UniPoly(std::move(rem), a.var())};
}

UniPoly divexact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw NotDivisible("polynomial division leaves a remainder of degree " +
                           std::to_string(r.degree()),
                       dump(r));
  }
  return q;
}

bool divides(const UniPoly& divisor, const UniPoly& a) {
  return divmod(a, divisor).remainder.is_zero();
}

UniPoly pow(const UniPoly& base, int exponent) {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  UniPoly result = UniPoly::constant(1, base.var());
  UniPoly b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

namespace {

UniPoly make_monic(UniPoly p) {
  if (p.is_zero()) return p;
  const BigRat inv = 1 / p.leading();
  return p * inv;
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  // Primitive remainder sequence keeps coefficient growth in check.
  UniPoly x = a.is_zero() ? a : primitive_part(a);
  UniPoly y = b.is_zero() ? b : primitive_part(b);
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.is_zero() ? r : primitive_part(r);
  }
  return make_monic(std::move(x));
}

BigRat content(const UniPoly& p) {
  if (p.is_zero()) return 0;
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  BigRat out(num_gcd, den_lcm);
  out.canonicalize();
  if (p.leading() < 0) out = -out;
  return out;
}

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * (1 / content(p));
}

bool has_integer_coeffs(const UniPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const BigRat& c) { return is_integer(c); });
}

bool has_nonnegative_coeffs(const UniPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const BigRat& c) { return c >= 0; });
}

UniPoly compose(const UniPoly& p, const UniPoly& q) {
  UniPoly acc({}, p.var());
  for (int k = p.degree(); k >= 0; --k) {
    acc *= q;
    acc += UniPoly::constant(p.coeff(k), p.var());
  }
  return acc.with_var(q.var());
}

UniPoly substitute_square(const UniPoly& p) {
  if (p.is_zero()) return p;
  std::vector<BigRat> out(2 * p.coeffs().size() - 1);
  for (size_t k = 0; k < p.coeffs().size(); ++k) out[2 * k] = p.coeffs()[k];
  return UniPoly(std::move(out), p.var());
}

UniPoly reflect(const UniPoly& p) {
  std::vector<BigRat> out = p.coeffs();
  for (size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return UniPoly(std::move(out), p.var());
}

UniPoly reverse(const UniPoly& p, int weight) {
  if (weight < p.degree()) {
    throw Error(ErrorCode::InvalidArgument, "reverse: weight below degree");
  }
  std::vector<BigRat> out(static_cast<size_t>(weight) + 1);
  for (int k = 0; k <= p.degree(); ++k) {
    out[static_cast<size_t>(weight - k)] = p.coeff(k);
  }
  return UniPoly(std::move(out), p.var());
}

std::pair<UniPoly, UniPoly> even_odd_parts(const UniPoly& p) {
  std::vector<BigRat> even, odd;
  for (size_t k = 0; k < p.coeffs().size(); ++k) {
    (k % 2 == 0 ? even : odd).push_back(p.coeffs()[k]);
  }
  return {UniPoly(std::move(even), p.var()), UniPoly(std::move(odd), p.var())};
}

UniPoly mobius_substitute(const UniPoly& p, const MobiusMap& map, int weight) {
  if (map.alpha * map.delta - map.beta * map.gamma == 0) {
    throw Error(ErrorCode::DegenerateMap, "mobius map has zero determinant");
  }
  if (weight < p.degree()) {
    throw Error(ErrorCode::InvalidArgument,
                "mobius_substitute: weight " + std::to_string(weight) +
                    " below degree " + std::to_string(p.degree()));
  }
  const auto& v = p.var();
  const UniPoly num = UniPoly::linear(map.beta, map.alpha, v);
  const UniPoly den = UniPoly::linear(map.delta, map.gamma, v);
  std::vector<UniPoly> num_pow{UniPoly::constant(1, v)};
  std::vector<UniPoly> den_pow{UniPoly::constant(1, v)};
  for (int k = 1; k <= weight; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  UniPoly out({}, v);
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) == 0) continue;
    out += p.coeff(k) * (num_pow[static_cast<size_t>(k)] *
                         den_pow[static_cast<size_t>(weight - k)]);
  }
  return out;
}

UniPoly interpolate(std::span<const std::pair<BigRat, BigRat>> samples,
                    std::string var) {
  const size_t n = samples.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (samples[i].first == samples[j].first) {
        throw Error(ErrorCode::DuplicateAbscissa,
                    "duplicate abscissa " + to_string(samples[i].first));
      }
    }
  }
  // Newton divided differences, then expand the Newton form.
  std::vector<BigRat> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = samples[i].second;
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (samples[i].first - samples[i - level].first);
    }
  }
  UniPoly acc({}, var);
  for (size_t i = n; i-- > 0;) {
    acc *= UniPoly::linear(-samples[i].first, 1, var);
    acc += UniPoly::constant(dd[i], var);
  }
  return acc;
}

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const BigRat& c = p.coeff(k);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const BigRat mag = abs(c);
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k > 0) {
      if (mag != 1) os << "*";
      os << p.var();
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace xyzpoly
