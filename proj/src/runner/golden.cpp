#include <algorithm>
#include <cstdio>
#include <optional>

#include "xyzpoly/errors.hpp"
#include "xyzpoly/factor.hpp"
#include "xyzpoly/poly_json.hpp"
#include "xyzpoly/qpoly.hpp"
#include "xyzpoly/runner.hpp"
#include "xyzpoly/tau.hpp"

namespace xyzpoly {

extern const char* const kGoldenCorpusJson;

std::string fnv1a64(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const GoldenCorpus& GoldenCorpus::embedded() {
  static const GoldenCorpus corpus = [] {
    const nlohmann::json j = nlohmann::json::parse(kGoldenCorpusJson);
    return GoldenCorpus{j.at("objects"), j.at("checksum").get<std::string>()};
  }();
  return corpus;
}

// Compact sorted-key form; nlohmann objects iterate in key order.
std::string GoldenCorpus::computed_checksum() const { return fnv1a64(objects.dump()); }

nlohmann::json regenerate_golden_objects() {
  // Variable tags are labels; they are set to the corpus names.
  nlohmann::json out;
  for (int n = 0; n <= 4; ++n) out["P"][std::to_string(n)] = to_json(qpoly(n).poly);
  RecurrenceFamily& s = cached_s_family();
  s.extend(-5, 5);
  for (int n = -5; n <= 5; ++n) out["s"][std::to_string(n)] = to_json(s.at(n).with_var("z"));
  const auto sbar = sbar_sequence(6);
  for (int n = 0; n <= 6; ++n) out["sbar"][std::to_string(n)] = to_json(sbar[static_cast<size_t>(n)].with_var("z"));
  for (int k = -3; k <= 3; ++k) {
    out["p"][std::to_string(k)] = to_json(p_poly(k).with_var("y"));
    out["q"][std::to_string(k)] = to_json(q_poly(k).with_var("y"));
  }
  for (int n = 1; n <= 9; ++n) out["A"][std::to_string(n)] = to_json(alt_polynomial(n).with_var("zeta"));
  return out;
}

namespace {

// Scalar c with expected == c * computed, when one exists.
std::optional<BigRat> proportionality(const nlohmann::json& expected, const nlohmann::json& computed) {
  if (expected.contains("coeffs")) {
    const UniPoly e = unipoly_from_json(expected), c = unipoly_from_json(computed);
    if (e.is_zero() || c.is_zero() || e.degree() != c.degree()) return std::nullopt;
    const BigRat r = e.leading() / c.leading();
    if (e == c * r) return r;
    return std::nullopt;
  }
  const BiPoly e = bipoly_from_json(expected), c = bipoly_from_json(computed);
  if (e.is_zero() || c.is_zero()) return std::nullopt;
  const BigRat r = e.leading_coeff() / c.leading_coeff();
  if (e == c * r) return r;
  return std::nullopt;
}

}  // namespace

VerificationReport golden_check() {
  VerificationReport rep;
  const GoldenCorpus& corpus = GoldenCorpus::embedded();
  rep.run("golden.checksum", [&] {
    const std::string got = corpus.computed_checksum();
    return Outcome{got == corpus.checksum, got, {}};
  });
  nlohmann::json regenerated;
  rep.run("golden.regenerate", [&] {
    regenerated = regenerate_golden_objects();
    return Outcome{true, "", {}};
  });
  if (regenerated.is_null()) return rep;
  for (const auto& [family, members] : corpus.objects.items()) {
    // Numeric order of the indices.
    std::vector<std::pair<int, std::string>> keys;
    for (const auto& [key, value] : members.items()) keys.emplace_back(std::stoi(key), key);
    std::sort(keys.begin(), keys.end());
    for (const auto& [index, key] : keys) {
      rep.run("golden." + family + "[" + key + "]", [&, fam = family, k = key] {
        const nlohmann::json& expected = corpus.objects.at(fam).at(k);
        if (!regenerated.contains(fam) || !regenerated.at(fam).contains(k)) {
          return Outcome{false, "not regenerated", {}};
        }
        const nlohmann::json& computed = regenerated.at(fam).at(k);
        if (expected.dump() == computed.dump()) return Outcome{true, "bit-exact", {}};
        std::string detail = "regenerated object differs from the corpus";
        if (const auto r = proportionality(expected, computed)) {
          detail += "; corpus = " + r->get_str() + " * regenerated";
        }
        return Outcome{false, detail, {{"corpus", expected}, {"regenerated", computed}}};
      });
    }
  }
  return rep;
}

}  // namespace xyzpoly
