#include "xyzpoly/tau.hpp"

#include <memory>

#include "xyzpoly/errors.hpp"
#include "xyzpoly/poly_json.hpp"

namespace xyzpoly {

namespace {

// z(z-1)(9z-1)^2 and (3z-1)^2(9z-1), each doubled.
const UniPoly& second_order_coeff() {
  static const UniPoly c = UniPoly({0, -1, 19, -99, 81}) * BigRat(2);
  return c;
}

const UniPoly& first_order_coeff() {
  static const UniPoly c = UniPoly({-1, 15, -63, 81}) * BigRat(2);
  return c;
}

}  // namespace

UniPoly bilinear_rhs(const UniPoly& t, const UniPoly& bracket) {
  const UniPoly d1 = t.derivative();
  const UniPoly d2 = d1.derivative();
  return bracket * t * t - second_order_coeff() * (d2 * t - d1 * d1) - first_order_coeff() * d1 * t;
}

BilinearStep tau_step(const BigRat& xi, int n) {
  const BigRat m(n);
  const BigRat lin = 2 * m - 4 * xi - BigRat(1, 3);
  const BigRat c0 = 12 * (3 * m - 6 * xi - 1) * (m - 2 * xi);
  const BigRat c1 = (m - 1) * (5 * m - 12 * xi);
  // c0 + (9z - 1) c1
  return {8 * lin * lin, UniPoly({c0 - c1, 9 * c1})};
}

BilinearStep s_step(int n) {
  const BigRat m(n);
  const BigRat c0 = 4 * (3 * m + 1) * (3 * m + 2);
  const BigRat c1 = m * (5 * m + 3);
  return {8 * (2 * m + 1) * (2 * m + 1), UniPoly({c0 - c1, 9 * c1})};
}

RecurrenceFamily::RecurrenceFamily(BigRat param, StepFn step, UniPoly t0, UniPoly t1)
    : param_(std::move(param)), step_(step) {
  entries_.emplace(0, std::move(t0));
  entries_.emplace(1, std::move(t1));
}

namespace {

UniPoly solve_step(const BilinearStep& st, const UniPoly& middle, const UniPoly& other, int target) {
  if (st.prefactor == 0) {
    throw Error(ErrorCode::ZeroPrefactor,
                "recurrence prefactor vanishes when solving for index " + std::to_string(target));
  }
  if (other.is_zero()) {
    throw Error(ErrorCode::ZeroPrefactor,
                "neighbouring entry is zero when solving for index " + std::to_string(target));
  }
  const UniPoly rhs = bilinear_rhs(middle, st.bracket);
  auto [q, r] = divmod(rhs, other * st.prefactor);
  if (!r.is_zero()) {
    throw PolynomialityViolation("exact division fails at index " + std::to_string(target), target,
                                 dump(r));
  }
  return q;
}

}  // namespace

UniPoly RecurrenceFamily::next(int n) const {
  return solve_step(step_(param_, n), entries_.at(n), entries_.at(n - 1), n + 1);
}

UniPoly RecurrenceFamily::prev(int n) const {
  return solve_step(step_(param_, n), entries_.at(n), entries_.at(n + 1), n - 1);
}

void RecurrenceFamily::extend(int n_min, int n_max) {
  int hi = entries_.rbegin()->first;
  while (hi < n_max) {
    entries_.emplace(hi + 1, next(hi));
    ++hi;
  }
  int lo = entries_.begin()->first;
  while (lo > n_min) {
    entries_.emplace(lo - 1, prev(lo));
    --lo;
  }
}

const UniPoly& RecurrenceFamily::at(int n) {
  extend(n, n);
  return entries_.at(n);
}

RecurrenceFamily tau_family(const BigRat& xi) {
  return RecurrenceFamily(xi, &tau_step, UniPoly::constant(1), UniPoly::constant(-4 * xi + BigRat(5, 3)));
}

RecurrenceFamily s_family() {
  return RecurrenceFamily(0, [](const BigRat&, int n) { return s_step(n); }, UniPoly::constant(1),
                          UniPoly::constant(1));
}

UniPoly tau_next(const RecurrenceFamily& family, int n) { return family.next(n); }

std::map<int, UniPoly> s_sequence(int n_min, int n_max) {
  if (n_min > 0 || n_max < 1) throw Error(ErrorCode::InvalidArgument, "range must contain 0 and 1");
  auto& fam = cached_s_family();
  fam.extend(n_min, n_max);
  std::map<int, UniPoly> out;
  for (int n = n_min; n <= n_max; ++n) out.emplace(n, fam.entries().at(n));
  return out;
}

std::vector<UniPoly> sbar_sequence(int n_max) {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be nonnegative");
  auto& fam = cached_tau_family(BigRat(-1, 3));
  fam.extend(0, n_max);
  std::vector<UniPoly> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(fam.entries().at(n));
  return out;
}

int degree_bound(int n, int k) {
  // floor((n(n-1) + 2k) / 4), numerator nonnegative for n, k >= 0
  return (n * (n - 1) + 2 * k) / 4;
}

RecurrenceFamily& cached_s_family() {
  static RecurrenceFamily fam = s_family();
  return fam;
}

RecurrenceFamily& cached_tau_family(const BigRat& xi) {
  static std::map<BigRat, std::unique_ptr<RecurrenceFamily>> cache;
  auto it = cache.find(xi);
  if (it == cache.end()) {
    it = cache.emplace(xi, std::make_unique<RecurrenceFamily>(tau_family(xi))).first;
  }
  return *it->second;
}

}  // namespace xyzpoly
