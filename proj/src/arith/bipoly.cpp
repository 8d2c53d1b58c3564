#include "xyzpoly/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "xyzpoly/errors.hpp"
#include "xyzpoly/poly_json.hpp"

namespace xyzpoly {

BiPoly::BiPoly(Terms terms, Vars vars) : terms_(std::move(terms)), vars_(std::move(vars)) {
  std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

BiPoly BiPoly::constant(const BigRat& c, Vars vars) {
  return monomial(c, 0, 0, std::move(vars));
}

BiPoly BiPoly::monomial(const BigRat& c, int first, int second, Vars vars) {
  if (first < 0 || second < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  Terms t;
  if (c != 0) t.emplace(Exponent{first, second}, c);
  return BiPoly(std::move(t), std::move(vars));
}

BiPoly BiPoly::from_second(const UniPoly& p, Vars vars) {
  Terms t;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) != 0) t.emplace(Exponent{0, k}, p.coeff(k));
  }
  return BiPoly(std::move(t), std::move(vars));
}

BiPoly BiPoly::from_first(const UniPoly& p, Vars vars) {
  Terms t;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) != 0) t.emplace(Exponent{k, 0}, p.coeff(k));
  }
  return BiPoly(std::move(t), std::move(vars));
}

BiPoly BiPoly::from_coefficients(std::span<const UniPoly> coeffs, Vars vars) {
  Terms t;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    for (int j = 0; j <= coeffs[k].degree(); ++j) {
      if (coeffs[k].coeff(j) != 0) {
        t.emplace(Exponent{static_cast<int>(k), j}, coeffs[k].coeff(j));
      }
    }
  }
  return BiPoly(std::move(t), std::move(vars));
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

int BiPoly::degree_first() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.first;
}

int BiPoly::degree_second() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

int BiPoly::min_degree_first() const {
  return terms_.empty() ? -1 : terms_.begin()->first.first;
}

int BiPoly::min_degree_second() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) d = std::min(d, e.second);
  return d;
}

BigRat BiPoly::coeff(int first, int second) const {
  auto it = terms_.find(Exponent{first, second});
  return it == terms_.end() ? BigRat(0) : it->second;
}

UniPoly BiPoly::coeff_first(int power) const {
  std::vector<BigRat> out;
  auto it = terms_.lower_bound(Exponent{power, 0});
  for (; it != terms_.end() && it->first.first == power; ++it) {
    const auto j = static_cast<size_t>(it->first.second);
    if (out.size() <= j) out.resize(j + 1);
    out[j] = it->second;
  }
  return UniPoly(std::move(out), vars_[1]);
}

UniPoly BiPoly::coeff_second(int power) const {
  std::vector<BigRat> out;
  for (const auto& [e, c] : terms_) {
    if (e.second != power) continue;
    const auto i = static_cast<size_t>(e.first);
    if (out.size() <= i) out.resize(i + 1);
    out[i] = c;
  }
  return UniPoly(std::move(out), vars_[0]);
}

UniPoly BiPoly::eval_first(const BigRat& value) const {
  std::vector<BigRat> out(static_cast<size_t>(std::max(degree_second(), -1) + 1));
  std::vector<BigRat> powers{BigRat(1)};
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e.first) powers.push_back(powers.back() * value);
    out[static_cast<size_t>(e.second)] += c * powers[static_cast<size_t>(e.first)];
  }
  return UniPoly(std::move(out), vars_[1]);
}

UniPoly BiPoly::eval_second(const BigRat& value) const {
  std::vector<BigRat> out(static_cast<size_t>(degree_first() + 1));
  std::vector<BigRat> powers{BigRat(1)};
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e.second) powers.push_back(powers.back() * value);
    out[static_cast<size_t>(e.first)] += c * powers[static_cast<size_t>(e.second)];
  }
  return UniPoly(std::move(out), vars_[0]);
}

BigRat BiPoly::operator()(const BigRat& first, const BigRat& second) const {
  return eval_first(first)(second);
}

BiPoly BiPoly::d_first() const {
  Terms out;
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) out.emplace(Exponent{e.first - 1, e.second}, c * e.first);
  }
  return BiPoly(std::move(out), vars_);
}

BiPoly BiPoly::d_second() const {
  Terms out;
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) out.emplace(Exponent{e.first, e.second - 1}, c * e.second);
  }
  return BiPoly(std::move(out), vars_);
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator*=(const BigRat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly({}, a.vars_);
  const int x0 = a.min_degree_first() + b.min_degree_first();
  const int y0 = a.min_degree_second() + b.min_degree_second();
  const int nx = a.degree_first() + b.degree_first() - x0 + 1;
  const int ny = a.degree_second() + b.degree_second() - y0 + 1;
  // Dense accumulator over the bounding box of the product.
  const size_t box = static_cast<size_t>(nx) * static_cast<size_t>(ny);
  if (has_integer_coeffs(a) && has_integer_coeffs(b)) {
    std::vector<BigInt> acc(box);
    std::vector<char> touched(box, 0);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        const size_t idx = static_cast<size_t>(ea.first + eb.first - x0) * static_cast<size_t>(ny) +
                           static_cast<size_t>(ea.second + eb.second - y0);
        mpz_addmul(acc[idx].get_mpz_t(), ca.get_num_mpz_t(), cb.get_num_mpz_t());
        touched[idx] = 1;
      }
    }
    BiPoly::Terms out;
    auto hint = out.end();
    for (int i = 0; i < nx; ++i) {
      for (int j = 0; j < ny; ++j) {
        const size_t idx = static_cast<size_t>(i) * static_cast<size_t>(ny) + static_cast<size_t>(j);
        if (touched[idx] && acc[idx] != 0) {
          hint = out.emplace_hint(hint, BiPoly::Exponent{i + x0, j + y0}, BigRat(acc[idx]));
          ++hint;
        }
      }
    }
    BiPoly result;
    result.terms_ = std::move(out);
    result.vars_ = a.vars_;
    return result;
  }
  // Scale both factors to integer coefficients and divide out afterwards.
  auto den_lcm = [](const BiPoly& p) {
    BigInt l = 1;
    for (const auto& [e, c] : p.terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
  };
  const BigInt la = den_lcm(a);
  const BigInt lb = den_lcm(b);
  BiPoly prod = (a * BigRat(la)) * (b * BigRat(lb));
  BigRat inv(1, la * lb);
  inv.canonicalize();
  return prod *= inv;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) {
  *this = *this * other;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BiPoly pow(const BiPoly& base, int exponent) {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  BiPoly result = BiPoly::constant(1, base.vars());
  for (int k = 0; k < exponent; ++k) result *= base;
  return result;
}

namespace {

// Lex-order division. If b | a then every intermediate remainder is a
// multiple of b, so its leading term is divisible by lt(b); a failure of
// that test, or a quotient term outside the degree box, proves b does not
// divide a.
std::optional<BiPoly> divide_lex(const BiPoly& a, const BiPoly& b, BiPoly* remainder_out) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  if (a.is_zero()) return BiPoly({}, a.vars());
  const auto [bp, bq] = b.leading_exponent();
  const BigRat inv_lead = 1 / b.leading_coeff();
  const int max_q_first = a.degree_first() - b.degree_first();
  const int max_q_second = a.degree_second() - b.degree_second();
  const int min_q_first = a.min_degree_first() - b.min_degree_first();
  const int min_q_second = a.min_degree_second() - b.min_degree_second();
  BiPoly::Terms rem = a.terms();
  BiPoly::Terms quot;
  BigRat tmp;
  while (!rem.empty()) {
    auto lt = std::prev(rem.end());
    const int qi = lt->first.first - bp;
    const int qj = lt->first.second - bq;
    if (qi < 0 || qj < 0 || qi < min_q_first || qj < min_q_second || qi > max_q_first || qj > max_q_second) {
      if (remainder_out) *remainder_out = BiPoly(std::move(rem), a.vars());
      return std::nullopt;
    }
    const BigRat qc = lt->second * inv_lead;
    for (const auto& [e, c] : b.terms()) {
      mpq_mul(tmp.get_mpq_t(), qc.get_mpq_t(), c.get_mpq_t());
      const BiPoly::Exponent key{e.first + qi, e.second + qj};
      auto [it, inserted] = rem.try_emplace(key, -tmp);
      if (!inserted) {
        it->second -= tmp;
        if (it->second == 0) rem.erase(it);
      }
    }
    quot.emplace(BiPoly::Exponent{qi, qj}, qc);
  }
  return BiPoly(std::move(quot), a.vars());
}

}  // namespace

std::optional<BiPoly> try_divexact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  if (!a.is_zero() && (a.degree_first() < b.degree_first() ||
                       a.degree_second() < b.degree_second())) {
    return std::nullopt;
  }
  return divide_lex(a, b, nullptr);
}

BiPoly divexact(const BiPoly& a, const BiPoly& b) {
  BiPoly rem;
  auto q = divide_lex(a, b, &rem);
  if (!q) {
    throw NotDivisible("bivariate division leaves a remainder (" +
                           std::to_string(rem.size()) + " terms)",
                       dump(rem));
  }
  return *q;
}

BigRat content(const BiPoly& p) {
  if (p.is_zero()) return 0;
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  BigRat out(num_gcd, den_lcm);
  out.canonicalize();
  if (p.leading_coeff() < 0) out = -out;
  return out;
}

BiPoly primitive_part(const BiPoly& p) {
  if (p.is_zero()) return p;
  const BigRat c = content(p);
  if (c == 1) return p;
  return p * (1 / c);
}

bool has_integer_coeffs(const BiPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return is_integer(t.second); });
}

bool has_nonnegative_coeffs(const BiPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return t.second >= 0; });
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const BigRat mag = abs(c);
    const bool unit_monomial = e.first == 0 && e.second == 0;
    if (unit_monomial || mag != 1) os << mag.get_str();
    bool need_star = !unit_monomial && mag != 1;
    auto put = [&](const std::string& v, int k) {
      if (k == 0) return;
      if (need_star) os << "*";
      os << v;
      if (k > 1) os << "^" << k;
      need_star = true;
    };
    put(p.vars()[0], e.first);
    put(p.vars()[1], e.second);
  }
  return os.str();
}

}  // namespace xyzpoly
