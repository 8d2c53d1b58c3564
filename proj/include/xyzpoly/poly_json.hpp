#pragma once

#include <string>

#include <json.hpp>

#include "xyzpoly/bipoly.hpp"
#include "xyzpoly/unipoly.hpp"

namespace xyzpoly {

// Interchange format. Rationals are decimal strings, "p/q" when not integral.
//   univariate: {"var":"z","coeffs":["1","3","4"]}
//   bivariate:  {"vars":["x","z"],"terms":[[[k,m],"c"],...]}, terms sorted
//               by (k, m) ascending
nlohmann::json to_json(const UniPoly& p);
nlohmann::json to_json(const BiPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& j);
BiPoly bipoly_from_json(const nlohmann::json& j);

std::string dump(const UniPoly& p);
std::string dump(const BiPoly& p);

}  // namespace xyzpoly
