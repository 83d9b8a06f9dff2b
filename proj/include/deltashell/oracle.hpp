#ifndef DELTASHELL_ORACLE_HPP
#define DELTASHELL_ORACLE_HPP

#include <vector>

#include "deltashell/model.hpp"

namespace ds {

/// Real number m * e^E with the mantissa kept near unit magnitude, so that
/// transfer-matrix products stay representable for kappa*R up to 1e4.
struct ScaledReal {
  double m = 0.0;
  double e = 0.0;

  static ScaledReal from(double v);
  static ScaledReal from(double mantissa, double log_scale);
  double to_double() const;
  double log_abs() const;  // -inf for zero
  ScaledReal operator*(const ScaledReal& o) const;
  ScaledReal operator*(double s) const;
  ScaledReal operator+(const ScaledReal& o) const;
  ScaledReal operator-(const ScaledReal& o) const;
  void normalize();
};

/// Coefficients (a_k, b_k) of u(r) = a r i_l(kr) + b r k_l(kr) per region;
/// region 1 is the ball r < R_1 (b_1 = 0), region N+1 the exterior.
struct RegionCoefficients {
  int ell = 0;
  double kappa = 0.0;
  std::vector<ScaledReal> a;
  std::vector<ScaledReal> b;
};

/// Propagates (1, 0) outward across every shell using continuity and the
/// derivative jump, with exact 2x2 interface algebra. Independent of the
/// m_l / K_l machinery by construction.
RegionCoefficients propagate(const ShellConfig& cfg, int ell, double kappa);

/// Exterior growing-solution coefficient a_{N+1}, normalized by
/// max(|a_{N+1}|, |b_{N+1}|). Zero iff E = -kappa^2 is an eigenvalue.
double mismatch(const ShellConfig& cfg, int ell, double kappa);

/// s-wave mismatch through the explicit sinh/exp pieces; a second,
/// independent code path used in tests. Moderate kappa*R only.
double mismatch_swave(const ShellConfig& cfg, double kappa);

struct RadialSample {
  double r;
  double u;
  double du;
};

/// Piecewise-exact radial profile at a verified root; throws NotARoot when
/// |mismatch| > 1e-6. Normalized to unit max |u| over the samples.
std::vector<RadialSample> eigenfunction_samples(const ShellConfig& cfg, int ell,
                                                double kappa_root,
                                                const std::vector<double>& r_grid);

}  // namespace ds

#endif
