#include <map>
#include <optional>

#include "xyzpoly/eigen.hpp"
#include "xyzpoly/errors.hpp"
#include "xyzpoly/linalg.hpp"

namespace xyzpoly {

namespace {

// Orbit-reduced K at an integer zeta. Row r is the r-th representative,
// column o collects every configuration of orbit o.
Matrix<BigInt> reduced_operator(const SpinSector& sector, const BigInt& zeta) {
  const int n = sector.n_sites();
  const size_t m = sector.orbit_count();
  Matrix<BigInt> a(m, std::vector<BigInt>(m));
  const BigInt z2 = zeta * zeta;
  for (size_t r = 0; r < m; ++r) {
    const uint32_t c = sector.representatives()[r];
    int balance = 0;
    for (int j = 0; j < n; ++j) {
      const int k = (j + 1) % n;
      const bool equal = ((c >> j) & 1u) == ((c >> k) & 1u);
      balance += equal ? 1 : -1;
      const int o = sector.orbit_of(c ^ (1u << j) ^ (1u << k));
      a[r][static_cast<size_t>(o)] += equal ? BigInt(-4 * zeta) : BigInt(-4);
    }
    a[r][r] += n * (z2 + 3) - (z2 - 1) * balance;
  }
  return a;
}

struct Sample {
  BigRat zeta;
  std::vector<BigRat> ratio;  // component / reference component
};

// 0, 1, -1, 2, -2, ...
BigInt sample_point(int i) { return (i % 2 == 1) ? BigInt((i + 1) / 2) : BigInt(-(i / 2)); }

UniPoly interpolate_at(const std::vector<Sample>& pts, size_t count, size_t k, const UniPoly& scale) {
  std::vector<std::pair<BigRat, BigRat>> xy;
  xy.reserve(count);
  for (size_t i = 0; i < count; ++i) xy.emplace_back(pts[i].zeta, scale(pts[i].zeta) * pts[i].ratio[k]);
  return interpolate(xy, "zeta");
}

bool matches(const UniPoly& p, const UniPoly& scale, const std::vector<Sample>& pts, size_t from, size_t k) {
  for (size_t i = from; i < pts.size(); ++i) {
    if (p(pts[i].zeta) != scale(pts[i].zeta) * pts[i].ratio[k]) return false;
  }
  return true;
}

// Denominator b of some a/b through the training values of component k that
// also reproduces the held-out points; candidates are the remainder/cofactor
// pairs of the extended Euclidean sequence.
std::optional<UniPoly> reconstruct_denominator(const std::vector<Sample>& pts, size_t train, size_t k) {
  const UniPoly f = interpolate_at(pts, train, k, UniPoly::constant(1, "zeta"));
  UniPoly m = UniPoly::constant(1, "zeta");
  for (size_t i = 0; i < train; ++i) m *= UniPoly::linear(-pts[i].zeta, 1, "zeta");
  UniPoly r0 = m, r1 = f;
  UniPoly t0({}, "zeta"), t1 = UniPoly::constant(1, "zeta");
  while (!r1.is_zero()) {
    bool ok = true;
    for (size_t i = train; i < pts.size() && ok; ++i) {
      const BigRat den = t1(pts[i].zeta);
      ok = den != 0 && r1(pts[i].zeta) == den * pts[i].ratio[k];
    }
    if (ok) return t1 * (1 / t1.leading());
    auto [q, r] = divmod(r0, r1);
    UniPoly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  return std::nullopt;
}

// Polynomial components through all samples, or nullopt when the current
// sample set does not pin them down.
std::optional<std::vector<UniPoly>> fit(const std::vector<Sample>& pts, size_t n_components) {
  const size_t held = 3;
  const size_t train = pts.size() - held;
  UniPoly denom = UniPoly::constant(1, "zeta");
  std::vector<UniPoly> comps(n_components);
  for (size_t k = 0; k < n_components; ++k) {
    UniPoly p = interpolate_at(pts, train, k, denom);
    if (!matches(p, denom, pts, train, k)) {
      const auto b = reconstruct_denominator(pts, train, k);
      if (!b) return std::nullopt;
      const UniPoly extra = divexact(*b, gcd(*b, denom));
      for (size_t j = 0; j < k; ++j) comps[j] *= extra;
      denom *= extra;
      p = interpolate_at(pts, train, k, denom);
      if (!matches(p, denom, pts, train, k)) return std::nullopt;
    }
    comps[k] = std::move(p);
  }
  return comps;
}

// Removes the common polynomial factor and the rational content, then
// scales so the reference component is 1 at zeta = 0.
std::vector<UniPoly> normalize(std::vector<UniPoly> comps, size_t ref) {
  UniPoly g;
  for (const auto& c : comps) g = gcd(g, c);
  if (g.degree() > 0) {
    for (auto& c : comps) c = divexact(c, g);
  }
  BigInt den = 1, num = 0;
  for (const auto& c : comps) {
    for (const auto& v : c.coeffs()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    }
  }
  for (auto& c : comps) {
    c *= BigRat(den);
    for (const auto& v : c.coeffs()) mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_num_mpz_t());
  }
  const BigRat at_zero = comps[ref].coeff(0);
  if (at_zero == 0) {
    throw Error(ErrorCode::InterpolationUnstable, "normalization component vanishes at zeta = 0");
  }
  const BigRat s = 1 / at_zero;
  for (auto& c : comps) c *= s;
  return comps;
}

}  // namespace

std::string normalization_config(int n_sites) {
  const int n = (n_sites - 1) / 2;
  const int ups = n % 2 == 1 ? n + 1 : n;
  return std::string(static_cast<size_t>(ups), '0') + std::string(static_cast<size_t>(n_sites - ups), '1');
}

std::string alternating_config(int n_sites) {
  const int n = (n_sites - 1) / 2;
  std::string s;
  if (n % 2 == 1) s = "0";
  for (int i = 0; i < n; ++i) s += "01";
  if (n % 2 == 0) s += "1";
  return s;
}

const UniPoly& GroundStateVector::component(const std::string& bits) const {
  if (static_cast<int>(bits.size()) != n_sites) throw Error(ErrorCode::BadLength, "configuration length");
  const int o = sector->orbit_of(parse_config(bits));
  if (o < 0) throw Error(ErrorCode::InvalidArgument, "even down-spin count: component vanishes");
  return components[static_cast<size_t>(o)];
}

UniPoly GroundStateVector::norm_squared() const {
  UniPoly out({}, "zeta");
  for (size_t o = 0; o < components.size(); ++o) {
    out += components[o] * components[o] * BigRat(sector->orbit_size(o));
  }
  return out;
}

nlohmann::json GroundStateVector::to_json() const {
  nlohmann::json comps = nlohmann::json::object();
  nlohmann::json sizes = nlohmann::json::object();
  for (size_t o = 0; o < components.size(); ++o) {
    const std::string key = config_string(sector->representatives()[o], n_sites);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : components[o].coeffs()) coeffs.push_back(c.get_str());
    comps[key] = std::move(coeffs);
    sizes[key] = sector->orbit_size(o);
  }
  return {{"N", n_sites},
          {"var", "zeta"},
          {"site_order", "little-endian, 0 = up"},
          {"normalization", normalization_config(n_sites)},
          {"components", std::move(comps)},
          {"orbit_sizes", std::move(sizes)}};
}

GroundStateVector ground_vector(int n_sites, const GroundVectorOptions& options) {
  auto sector = std::make_shared<const SpinSector>(n_sites);
  GroundStateVector out;
  out.n_sites = n_sites;
  out.sector = sector;
  const size_t m = sector->orbit_count();
  const int ref_orbit = sector->orbit_of(parse_config(normalization_config(n_sites)));
  const size_t ref = static_cast<size_t>(ref_orbit);

  std::vector<Sample> pts;
  std::optional<std::vector<UniPoly>> previous;
  int next_checkpoint = options.first_checkpoint;
  for (int i = 0; static_cast<int>(pts.size()) < options.max_samples; ++i) {
    const BigInt zeta = sample_point(i);
    const auto kernel = nullspace(reduced_operator(*sector, zeta), m);
    if (kernel.size() != 1 || kernel[0][ref] == 0) {
      // Isolated degeneracies are skipped; a degenerate point is never used.
      out.skipped.emplace_back(zeta);
      if (out.skipped.size() > 8) {
        throw Error(ErrorCode::KernelDimension,
                    "kernel dimension " + std::to_string(kernel.size()) + " at zeta = " + zeta.get_str() +
                        " and too many earlier degenerate points");
      }
      continue;
    }
    Sample s{BigRat(zeta), {}};
    s.ratio.reserve(m);
    for (size_t k = 0; k < m; ++k) s.ratio.push_back(BigRat(kernel[0][k], kernel[0][ref]));
    for (auto& r : s.ratio) r.canonicalize();
    pts.push_back(std::move(s));
    if (static_cast<int>(pts.size()) < next_checkpoint) continue;
    next_checkpoint += options.step;

    auto comps = fit(pts, m);
    if (!comps) {
      previous.reset();
      continue;
    }
    auto normalized = normalize(std::move(*comps), ref);
    if (previous && *previous == normalized) {
      out.components = std::move(normalized);
      for (const auto& p : pts) out.samples_used.push_back(p.zeta);
      for (const auto& c : out.components) out.max_degree = std::max(out.max_degree, c.degree());
      return out;
    }
    previous = std::move(normalized);
  }
  throw Error(ErrorCode::InterpolationUnstable,
              "degree scan did not stabilize within " + std::to_string(options.max_samples) + " samples");
}

const GroundStateVector& cached_ground_vector(int n_sites) {
  static std::map<int, std::unique_ptr<GroundStateVector>> cache;
  auto it = cache.find(n_sites);
  if (it == cache.end()) {
    it = cache.emplace(n_sites, std::make_unique<GroundStateVector>(ground_vector(n_sites))).first;
  }
  return *it->second;
}

}  // namespace xyzpoly
