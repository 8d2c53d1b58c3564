#pragma once

#include <vector>

#include "xyzpoly/unipoly.hpp"

namespace xyzpoly {

struct IrreducibleFactor {
  UniPoly factor;  // primitive, positive leading coefficient
  int multiplicity = 1;
};

/// Complete factorization over the integers of a nonzero polynomial with
/// rational coefficients, up to the rational content (which is dropped).
/// Square-free decomposition, Cantor-Zassenhaus modulo a small prime,
/// Hensel lifting and subset recombination. Factors are sorted by degree,
/// then coefficients.
std::vector<IrreducibleFactor> factor_over_integers(const UniPoly& f);

}  // namespace xyzpoly
