#include "xyzpoly/poly_json.hpp"

#include "xyzpoly/errors.hpp"

namespace xyzpoly {

using nlohmann::json;

json to_json(const UniPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return json{{"var", p.var()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const BiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(json::array({json::array({e.first, e.second}), c.get_str()}));
  }
  return json{{"vars", json::array({p.vars()[0], p.vars()[1]})}, {"terms", std::move(terms)}};
}

namespace {

BigRat rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return BigRat(j.get<long>());
  throw Error(ErrorCode::Parse, "coefficient must be a decimal string: " + j.dump());
}

}  // namespace

UniPoly unipoly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw Error(ErrorCode::Parse, "univariate polynomial needs a \"coeffs\" array");
  }
  std::string var = j.value("var", std::string("z"));
  std::vector<BigRat> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(rational_from_json(c));
  return UniPoly(std::move(coeffs), std::move(var));
}

BiPoly bipoly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw Error(ErrorCode::Parse, "bivariate polynomial needs a \"terms\" array");
  }
  BiPoly::Vars vars{"x", "z"};
  if (j.contains("vars")) {
    const auto& v = j["vars"];
    if (!v.is_array() || v.size() != 2) throw Error(ErrorCode::Parse, "\"vars\" must name two variables");
    vars = {v[0].get<std::string>(), v[1].get<std::string>()};
  }
  BiPoly::Terms terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != 2) {
      throw Error(ErrorCode::Parse, "malformed term: " + t.dump());
    }
    const int a = t[0][0].get<int>();
    const int b = t[0][1].get<int>();
    if (a < 0 || b < 0) throw Error(ErrorCode::Parse, "negative exponent in " + t.dump());
    BigRat c = rational_from_json(t[1]);
    auto [it, inserted] = terms.try_emplace({a, b}, c);
    if (!inserted) it->second += c;
  }
  return BiPoly(std::move(terms), std::move(vars));
}

std::string dump(const UniPoly& p) { return to_json(p).dump(); }

std::string dump(const BiPoly& p) { return to_json(p).dump(); }

}  // namespace xyzpoly
