#include <algorithm>
#include <bit>

#include "xyzpoly/eigen.hpp"
#include "xyzpoly/errors.hpp"

namespace xyzpoly {

namespace {

// Site 0 becomes the most significant bit, so integer order is string order.
uint32_t lex_key(uint32_t config, int n) {
  uint32_t key = 0;
  for (int i = 0; i < n; ++i) key = (key << 1) | ((config >> i) & 1u);
  return key;
}

uint32_t rotate(uint32_t config, int r, int n) {
  const uint32_t mask = (1u << n) - 1;
  return ((config >> r) | (config << (n - r))) & mask;
}

uint32_t mirror(uint32_t config, int n) {
  uint32_t out = 0;
  for (int i = 0; i < n; ++i) out |= ((config >> i) & 1u) << (n - 1 - i);
  return out;
}

void require_odd_length(int n) {
  if (n < 3 || n % 2 == 0 || n > 25) {
    throw Error(ErrorCode::BadLength, "chain length must be odd, 3 <= N <= 25, got " + std::to_string(n));
  }
}

}  // namespace

uint32_t SpinSector::canonical(uint32_t config, int n) {
  uint32_t best = config;
  uint32_t best_key = lex_key(config, n);
  for (int r = 0; r < n; ++r) {
    const uint32_t rot = r == 0 ? config : rotate(config, r, n);
    for (uint32_t c : {rot, mirror(rot, n)}) {
      const uint32_t k = lex_key(c, n);
      if (k < best_key) {
        best_key = k;
        best = c;
      }
    }
  }
  return best;
}

SpinSector::SpinSector(int n_sites) : n_(n_sites) {
  require_odd_length(n_sites);
  const uint32_t total = 1u << n_sites;
  orbit_.assign(total, -1);
  std::vector<uint32_t> canon(total, 0);
  for (uint32_t c = 0; c < total; ++c) {
    if (std::popcount(c) % 2 == 0) continue;
    configs_.push_back(c);
    canon[c] = canonical(c, n_sites);
    if (canon[c] == c) reps_.push_back(c);
  }
  std::sort(reps_.begin(), reps_.end(),
            [n_sites](uint32_t a, uint32_t b) { return lex_key(a, n_sites) < lex_key(b, n_sites); });
  std::vector<int> rep_index(total, -1);
  for (size_t i = 0; i < reps_.size(); ++i) rep_index[reps_[i]] = static_cast<int>(i);
  sizes_.assign(reps_.size(), 0);
  for (uint32_t c : configs_) {
    orbit_[c] = rep_index[canon[c]];
    ++sizes_[static_cast<size_t>(orbit_[c])];
  }
}

std::string config_string(uint32_t config, int n_sites) {
  std::string s(static_cast<size_t>(n_sites), '0');
  for (int i = 0; i < n_sites; ++i) {
    if ((config >> i) & 1u) s[static_cast<size_t>(i)] = '1';
  }
  return s;
}

uint32_t parse_config(const std::string& bits) {
  if (bits.empty() || bits.size() > 25) throw Error(ErrorCode::Parse, "bad configuration string");
  uint32_t c = 0;
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      c |= 1u << i;
    } else if (bits[i] != '0') {
      throw Error(ErrorCode::Parse, "configuration must be a 0/1 string: " + bits);
    }
  }
  return c;
}

std::vector<std::pair<uint32_t, UniPoly>> scaled_operator_row(uint32_t config, int n) {
  // K = 2(zeta^2+3)(H + N/2): an equal-spin bond flips with -4 zeta, an
  // unequal one with -4; the diagonal is N(zeta^2+3) - (zeta^2-1)(eq - diff).
  std::vector<std::pair<uint32_t, UniPoly>> row;
  int balance = 0;
  for (int j = 0; j < n; ++j) {
    const int k = (j + 1) % n;
    const bool equal = ((config >> j) & 1u) == ((config >> k) & 1u);
    balance += equal ? 1 : -1;
    const uint32_t target = config ^ (1u << j) ^ (1u << k);
    row.emplace_back(target, equal ? UniPoly::monomial(-4, 1, "zeta") : UniPoly::constant(-4, "zeta"));
  }
  UniPoly diag = UniPoly({BigRat(3 * n), BigRat(0), BigRat(n)}, "zeta") -
                 UniPoly({BigRat(-1), BigRat(0), BigRat(1)}, "zeta") * BigRat(balance);
  row.emplace_back(config, std::move(diag));
  return row;
}

SparseExactMatrix build_hamiltonian(int n, const BigRat& zeta) {
  require_odd_length(n);
  const CouplingSet j = couplings(zeta);
  SparseExactMatrix h;
  const SpinSector sector(n);
  h.configs = sector.configs();
  std::vector<uint32_t> index(1u << n, 0);
  for (size_t i = 0; i < h.configs.size(); ++i) index[h.configs[i]] = static_cast<uint32_t>(i);
  const BigRat eq_flip = -(j.jx - j.jy) / 2;
  const BigRat diff_flip = -(j.jx + j.jy) / 2;
  for (uint32_t c : h.configs) {
    std::vector<std::pair<uint32_t, BigRat>> row;
    int balance = 0;
    for (int a = 0; a < n; ++a) {
      const int b = (a + 1) % n;
      const bool equal = ((c >> a) & 1u) == ((c >> b) & 1u);
      balance += equal ? 1 : -1;
      const BigRat v = equal ? eq_flip : diff_flip;
      if (v != 0) row.emplace_back(index[c ^ (1u << a) ^ (1u << b)], v);
    }
    const BigRat d = -j.jz * balance / 2;
    if (d != 0) row.emplace_back(index[c], d);
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    h.rows.push_back(std::move(row));
  }
  return h;
}

CouplingSet couplings(const BigRat& zeta) {
  const BigRat den = zeta * zeta + 3;
  return CouplingSet{zeta, 2 * (1 + zeta) / den, 2 * (1 - zeta) / den, (zeta * zeta - 1) / den};
}

VerificationReport check_couplings(const std::vector<BigRat>& points) {
  VerificationReport rep;
  rep.run("couplings.symbolic", [] {
    // Numerators over (zeta^2+3)^2 and (zeta^2+3).
    const UniPoly jx({BigRat(2), BigRat(2)}, "zeta");
    const UniPoly jy({BigRat(2), BigRat(-2)}, "zeta");
    const UniPoly jz({BigRat(-1), BigRat(0), BigRat(1)}, "zeta");
    const UniPoly den({BigRat(3), BigRat(0), BigRat(1)}, "zeta");
    const UniPoly pairs = jx * jy + jy * jz + jz * jx;
    const UniPoly sum = jx + jy + jz - den;
    return Outcome{pairs.is_zero() && sum.is_zero(), "numerators of JxJy+JyJz+JzJx and Jx+Jy+Jz-1", {}};
  });
  for (const BigRat& z : points) {
    rep.run("couplings[zeta=" + z.get_str() + "]", [z] {
      const CouplingSet j = couplings(z);
      const bool ok = j.jx * j.jy + j.jy * j.jz + j.jz * j.jx == 0 && j.jx + j.jy + j.jz == 1;
      return Outcome{ok, "", {}};
    });
  }
  return rep;
}

}  // namespace xyzpoly
