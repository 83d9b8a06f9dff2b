#ifndef DELTASHELL_MODEL_HPP
#define DELTASHELL_MODEL_HPP

#include <cstddef>
#include <vector>

#include "deltashell/errors.hpp"

namespace ds {

/// Radii and constant couplings of N concentric shells, dimensionless units
/// (hbar^2/2m = 1). Immutable after validation; safe to share across threads.
struct ShellConfig {
  std::vector<double> radii;   // 0 < R_1 < R_2 < ... < R_N
  std::vector<double> alphas;  // couplings, any sign, finite

  std::size_t size() const { return radii.size(); }
};

/// Angular momentum channel, degeneracy 2l+1.
struct Channel {
  int ell = 0;
};

/// Decay rate kappa > 0 with E = -kappa^2.
struct Kappa {
  double kappa = 0.0;
  double energy() const { return -kappa * kappa; }
};

/// One eigenvalue record.
struct BoundState {
  int ell = 0;
  double kappa = 0.0;
  double energy = 0.0;
  int degeneracy = 1;  // 2*ell + 1
  double residual = 0.0;
};

/// Checks all ShellConfig invariants; throws ds::Error naming the offending
/// index. Idempotent: a valid config passes unchanged.
const ShellConfig& validate_config(const ShellConfig& cfg);

/// d = R_2 - R_1 for a two-shell config.
double separation(const ShellConfig& cfg);

}  // namespace ds

#endif
