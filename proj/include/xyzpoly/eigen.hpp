#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "xyzpoly/bigrat.hpp"
#include "xyzpoly/report.hpp"
#include "xyzpoly/unipoly.hpp"

namespace xyzpoly {

/// J_x = 2(1+zeta)/(zeta^2+3), J_y = 2(1-zeta)/(zeta^2+3),
/// J_z = (zeta^2-1)/(zeta^2+3).
struct CouplingSet {
  BigRat zeta, jx, jy, jz;
};

CouplingSet couplings(const BigRat& zeta);
/// Both coupling identities, at the given points and as polynomial
/// identities in zeta.
VerificationReport check_couplings(const std::vector<BigRat>& points);

/// Configurations of an odd chain with an odd number of down spins. Bit i is
/// site i+1, set when the spin is down. Orbits are taken under translations
/// and reflection; the representative is the lexicographically smallest
/// string.
class SpinSector {
 public:
  explicit SpinSector(int n_sites);

  int n_sites() const { return n_; }
  const std::vector<uint32_t>& configs() const { return configs_; }
  const std::vector<uint32_t>& representatives() const { return reps_; }
  int orbit_size(size_t orbit) const { return sizes_[orbit]; }
  /// Orbit index, or -1 for an even down-spin count.
  int orbit_of(uint32_t config) const { return orbit_[config]; }
  size_t orbit_count() const { return reps_.size(); }

  /// Smallest string in the dihedral orbit of config.
  static uint32_t canonical(uint32_t config, int n_sites);

 private:
  int n_;
  std::vector<uint32_t> configs_;
  std::vector<uint32_t> reps_;
  std::vector<int> sizes_;
  std::vector<int> orbit_;
};

/// "0" = up, "1" = down, character i is site i+1.
std::string config_string(uint32_t config, int n_sites);
uint32_t parse_config(const std::string& bits);

/// Sparse row-major matrix with exact entries on a list of configurations.
struct SparseExactMatrix {
  std::vector<uint32_t> configs;
  std::vector<std::vector<std::pair<uint32_t, BigRat>>> rows;  // (column index, value)
};

/// The Hamiltonian restricted to the odd down-spin sector. Throws BadLength
/// unless N is odd and N >= 3.
SparseExactMatrix build_hamiltonian(int n_sites, const BigRat& zeta);

/// Scaled shifted operator K = 2(zeta^2+3)(H + N/2) applied to one basis
/// state at a symbolic zeta: pairs (target configuration, coefficient).
std::vector<std::pair<uint32_t, UniPoly>> scaled_operator_row(uint32_t config, int n_sites);

struct GroundStateVector {
  int n_sites = 0;
  std::shared_ptr<const SpinSector> sector;
  std::vector<UniPoly> components;   // by orbit index, variable "zeta"
  std::vector<BigRat> samples_used;  // sample points entering the final fit
  std::vector<BigRat> skipped;       // points where the kernel was degenerate
  int max_degree = 0;

  const UniPoly& component(const std::string& bits) const;
  /// |Psi|^2 summed over all configurations.
  UniPoly norm_squared() const;
  /// Orbit representatives to coefficient arrays.
  nlohmann::json to_json() const;
};

struct GroundVectorOptions {
  int first_checkpoint = 8;  // sample count of the first reconstruction attempt
  int step = 4;              // sample points added per retry
  int max_samples = 160;     // InterpolationUnstable beyond this
};

/// Ground state Psi_- in the S = -1 sector with polynomial components:
/// exact kernels at integer sample points, reconstruction of a common
/// denominator, content removal and the zeta = 0 normalization.
GroundStateVector ground_vector(int n_sites, const GroundVectorOptions& options = {});
const GroundStateVector& cached_ground_vector(int n_sites);

/// 0^(n+1) 1^n for odd n, 0^n 1^(n+1) for even n.
std::string normalization_config(int n_sites);
/// 0 (01)^n for odd n, (01)^n 1 for even n.
std::string alternating_config(int n_sites);

/// H Psi = -(N/2) Psi symbolically over the full sector, integrality,
/// normalization, trivial content, nonvanishing of every odd component.
VerificationReport verify_ground_vector(const GroundStateVector& psi);
VerificationReport verify_conjecture_1(int n_sites);
VerificationReport verify_conjectures_2_3_4(int n_sites);
VerificationReport verify_symmetries(int n_sites);

/// Lowest eigenvalue of the float Hamiltonian on the odd sector (dense for
/// N <= 9, Lanczos above).
double min_eigenvalue_float(int n_sites, double zeta);
VerificationReport float_spectrum_check(int n_sites, int samples, uint64_t seed);

/// Conjectured |Psi|^2 for index m = (N-1)/2:
/// (4/3)^m zeta^(m(m+1)) s_m(zeta^-2) s_{-m-1}(zeta^-2).
UniPoly conjectured_norm(int m);

/// zeta^e p(zeta^-2) as a polynomial in zeta; throws when 2 deg p > e.
UniPoly clear_inverse_square(const UniPoly& p, int e);

}  // namespace xyzpoly
