#include "xyzpoly/zfactor.hpp"

#include <algorithm>
#include <random>

#include "xyzpoly/errors.hpp"

namespace xyzpoly {

namespace {

// Integer polynomial, low power first, no trailing zeros.
using ZPoly = std::vector<BigInt>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

ZPoly reduce(ZPoly a, const BigInt& m) {
  for (auto& c : a) c = mod(c, m);
  trim(a);
  return a;
}

// Coefficients in (-m/2, m/2].
ZPoly symmetric(ZPoly a, const BigInt& m) {
  const BigInt half = m / 2;
  for (auto& c : a) {
    c = mod(c, m);
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

ZPoly add(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return reduce(std::move(out), m);
}

ZPoly sub(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] -= b[i];
  }
  return reduce(std::move(out), m);
}

ZPoly mul(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return reduce(std::move(out), m);
}

ZPoly scale(const ZPoly& a, const BigInt& s, const BigInt& m) {
  ZPoly out = a;
  for (auto& c : out) c *= s;
  return reduce(std::move(out), m);
}

BigInt inverse(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), BigInt(mod(a, m)).get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorCode::InvalidArgument, "leading coefficient not invertible");
  }
  return r;
}

// Division by b whose leading coefficient is a unit modulo m.
std::pair<ZPoly, ZPoly> divmod(ZPoly a, const ZPoly& b, const BigInt& m) {
  a = reduce(std::move(a), m);
  if (deg(a) < deg(b)) return {{}, a};
  const BigInt lead_inv = inverse(b.back(), m);
  ZPoly q(a.size() - b.size() + 1);
  while (deg(a) >= deg(b)) {
    const int shift = deg(a) - deg(b);
    const BigInt c = mod(a.back() * lead_inv, m);
    q[static_cast<size_t>(shift)] = c;
    for (size_t j = 0; j < b.size(); ++j) a[j + static_cast<size_t>(shift)] -= c * b[j];
    a = reduce(std::move(a), m);
  }
  trim(q);
  return {q, a};
}

ZPoly rem(const ZPoly& a, const ZPoly& b, const BigInt& m) { return divmod(a, b, m).second; }

ZPoly monic(const ZPoly& a, const BigInt& p) {
  if (a.empty()) return a;
  return scale(a, inverse(a.back(), p), p);
}

// Monic gcd over F_p.
ZPoly gcd(ZPoly a, ZPoly b, const BigInt& p) {
  a = reduce(std::move(a), p);
  b = reduce(std::move(b), p);
  while (!b.empty()) {
    ZPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// s, t with s a + t b = 1 over F_p for coprime a, b.
std::pair<ZPoly, ZPoly> bezout(const ZPoly& a, const ZPoly& b, const BigInt& p) {
  ZPoly r0 = reduce(a, p), r1 = reduce(b, p);
  ZPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    ZPoly s2 = sub(s0, mul(q, s1, p), p);
    ZPoly t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw Error(ErrorCode::InvalidArgument, "bezout: inputs not coprime");
  const BigInt inv = inverse(r0[0], p);
  return {scale(s0, inv, p), scale(t0, inv, p)};
}

ZPoly powmod(ZPoly base, BigInt e, const ZPoly& f, const BigInt& p) {
  ZPoly out{1};
  base = rem(base, f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) out = rem(mul(out, base, p), f, p);
    e >>= 1;
    if (e > 0) base = rem(mul(base, base, p), f, p);
  }
  return out;
}

ZPoly derivative(const ZPoly& a) {
  ZPoly out;
  for (size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * static_cast<unsigned long>(i));
  trim(out);
  return out;
}

// Distinct-degree then equal-degree factorization of a monic square-free
// polynomial over F_p, p odd.
std::vector<ZPoly> factor_mod_p(ZPoly f, const BigInt& p, std::mt19937_64& rng) {
  std::vector<std::pair<ZPoly, int>> by_degree;
  const ZPoly x{0, 1};
  ZPoly h = x;
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = powmod(h, p, f, p);
    ZPoly g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      by_degree.emplace_back(g, i);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) by_degree.emplace_back(f, deg(f));

  std::vector<ZPoly> out;
  std::vector<std::pair<ZPoly, int>> work = by_degree;
  while (!work.empty()) {
    auto [g, d] = work.back();
    work.pop_back();
    if (deg(g) == d) {
      out.push_back(g);
      continue;
    }
    BigInt e;
    mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    while (true) {
      ZPoly a(static_cast<size_t>(deg(g)));
      for (auto& c : a) c = BigInt(static_cast<unsigned long>(rng() % p.get_ui()));
      trim(a);
      if (deg(a) < 1) continue;
      ZPoly b = sub(powmod(a, e, g, p), ZPoly{1}, p);
      ZPoly c = gcd(g, b, p);
      if (deg(c) > 0 && deg(c) < deg(g)) {
        work.emplace_back(c, d);
        work.emplace_back(divmod(g, c, p).first, d);
        break;
      }
    }
  }
  return out;
}

// Lifts f = lc * g * h (mod p), g and h monic, to the same identity modulo
// p^k. Returns g lifted.
ZPoly hensel_lift(const ZPoly& f, ZPoly g, ZPoly h, const BigInt& p, int k) {
  const BigInt lc = f.back();
  auto [s, t] = bezout(g, h, p);
  const BigInt lc_inv = inverse(lc, p);
  BigInt m = p;
  for (int j = 1; j < k; ++j) {
    const BigInt m_next = m * p;
    // e = (f - lc g h) / m, exact over Z after symmetric reduction mod m p.
    ZPoly gh = mul(g, h, m_next);
    ZPoly err = symmetric(sub(f, scale(gh, lc, m_next), m_next), m_next);
    for (auto& c : err) c /= m;
    ZPoly e = scale(reduce(err, p), lc_inv, p);
    auto [q, r] = divmod(mul(e, t, p), g, p);
    ZPoly dh = add(mul(e, s, p), mul(q, h, p), p);
    g = add(g, scale(r, m, m_next), m_next);
    h = add(h, scale(dh, m, m_next), m_next);
    m = m_next;
  }
  return g;
}

ZPoly to_z(const UniPoly& f) {
  ZPoly out;
  for (const auto& c : f.coeffs()) {
    if (!is_integer(c)) throw Error(ErrorCode::InvalidArgument, "integer polynomial expected");
    out.push_back(c.get_num());
  }
  return out;
}

UniPoly from_z(const ZPoly& a, const std::string& var) {
  std::vector<BigRat> c;
  for (const auto& v : a) c.emplace_back(v);
  return UniPoly(std::move(c), var);
}

// Bound on the coefficients of any integer factor of f (Mignotte), times |lc|.
BigInt factor_bound(const ZPoly& f) {
  BigInt norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  BigInt norm = sqrt(norm2) + 1;
  BigInt bound = norm << static_cast<unsigned long>(deg(f));
  BigInt lc = abs(f.back());
  return bound * lc;
}

bool square_free_mod(const ZPoly& f, const BigInt& p) {
  if (mod(f.back(), p) == 0) return false;
  return deg(gcd(f, derivative(f), p)) == 0;
}

// Irreducible factors of a primitive square-free integer polynomial with
// positive leading coefficient and nonzero constant term.
std::vector<UniPoly> zassenhaus(const UniPoly& input) {
  const std::string var = input.var();
  if (input.degree() <= 1) return {input};
  ZPoly f = to_z(input);
  std::mt19937_64 rng(0x5eed);

  // Among the first few admissible primes keep the one with fewest factors.
  static const int primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                               53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
  BigInt best_p = 0;
  std::vector<ZPoly> best;
  int tried = 0;
  for (int pi : primes) {
    const BigInt p(pi);
    if (!square_free_mod(f, p)) continue;
    auto fs = factor_mod_p(monic(reduce(f, p), p), p, rng);
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
    if (best.size() == 1 || ++tried == 5) break;
  }
  if (best_p == 0) throw Error(ErrorCode::SplitFailure, "no admissible prime for Zassenhaus");
  if (best.size() == 1) return {input};

  const BigInt& p = best_p;
  const BigInt bound = 2 * factor_bound(f) + 1;
  int k = 1;
  BigInt pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }

  std::vector<ZPoly> lifted;
  for (size_t i = 0; i < best.size(); ++i) {
    ZPoly rest{1};
    for (size_t j = 0; j < best.size(); ++j) {
      if (j != i) rest = mul(rest, best[j], p);
    }
    lifted.push_back(hensel_lift(f, best[i], rest, p, k));
  }

  std::vector<UniPoly> out;
  UniPoly remaining = input;
  std::vector<ZPoly> pool = lifted;
  for (size_t size = 1; 2 * size <= pool.size();) {
    bool found = false;
    std::vector<size_t> idx(size);
    for (size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      const BigInt lc = to_z(remaining).back();
      ZPoly cand{lc};
      for (size_t i : idx) cand = mul(cand, pool[i], pk);
      UniPoly g = primitive_part(from_z(symmetric(cand, pk), var));
      auto [q, r] = divmod(remaining, g);
      if (r.is_zero() && has_integer_coeffs(q)) {
        out.push_back(g);
        remaining = q;
        std::vector<ZPoly> next;
        for (size_t i = 0; i < pool.size(); ++i) {
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
        }
        pool = std::move(next);
        found = true;
        break;
      }
      // Next combination of `size` indices out of pool.size().
      int pos = static_cast<int>(size) - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == pool.size() - size + static_cast<size_t>(pos)) --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (size_t i = static_cast<size_t>(pos) + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++size;
  }
  if (remaining.degree() > 0) out.push_back(primitive_part(remaining));
  return out;
}

}  // namespace

std::vector<IrreducibleFactor> factor_over_integers(const UniPoly& input) {
  if (input.is_zero()) throw Error(ErrorCode::InvalidArgument, "factor of zero polynomial");
  std::vector<IrreducibleFactor> out;
  UniPoly f = primitive_part(input);
  const std::string var = f.var();

  int low = 0;
  while (f.coeff(low) == 0) ++low;
  if (low > 0) {
    out.push_back({UniPoly::monomial(1, 1, var), low});
    std::vector<BigRat> c(f.coeffs().begin() + low, f.coeffs().end());
    f = UniPoly(std::move(c), var);
  }

  // Yun's square-free decomposition over Q.
  if (f.degree() > 0) {
    UniPoly a = f;
    UniPoly b = gcd(a, a.derivative());
    UniPoly c = divexact(a, b);
    UniPoly d = divexact(a.derivative(), b) - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
      UniPoly y = gcd(c, d);
      if (y.degree() > 0) {
        for (auto& g : zassenhaus(primitive_part(y))) out.push_back({g.with_var(var), i});
      }
      c = divexact(c, y);
      d = divexact(d, y) - c.derivative();
    }
  }
  std::sort(out.begin(), out.end(), [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.coeffs() < b.factor.coeffs();
  });
  return out;
}

}  // namespace xyzpoly
