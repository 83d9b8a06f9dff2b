#ifndef DELTASHELL_SOLVER_HPP
#define DELTASHELL_SOLVER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "deltashell/model.hpp"
#include "deltashell/secular.hpp"

namespace ds {

struct ScanPlan {
  double kappa_min = 1e-6;
  double kappa_max = 50.0;
  int grid_points = 2000;  // geometric spacing
  int ell_max = 32;
  double tol = 1e-12;  // on kappa
};

const ScanPlan& validate_plan(const ScanPlan& plan);

struct ChannelRoot {
  double kappa;
  double residual;  // |secular function| at the refined root
};

struct ChannelScan {
  std::vector<ChannelRoot> roots;
  bool grid_too_coarse = false;  // hint: two roots may share a grid cell
  /// Local minima of |S| below 1e-6 without a sign change, with the
  /// double-root residual pair at each (N = 2 only).
  std::vector<std::pair<double, std::pair<double, double>>> near_tangencies;
};

struct Spectrum {
  std::vector<BoundState> states;  // sorted by energy ascending
  std::vector<std::pair<int, int>> per_channel_counts;
  bool ell_max_reached = false;
};

/// The channel secular function: the scaled s-wave form S(k) for N = 2,
/// l = 0 (Lemma-equivalent zero set), det(I + m_l Theta) otherwise.
double channel_function(const ShellConfig& cfg, int ell, double kappa);

/// All roots of the channel secular function on the geometric grid, each
/// refined by safeguarded secant/bisection to |dk| <= plan.tol.
ChannelScan find_channel_roots(const ShellConfig& cfg, int ell, const ScanPlan& plan);

/// Channel-by-channel enumeration; stops at the first empty channel
/// (centrifugal monotonicity) or at plan.ell_max with a reported flag.
Spectrum enumerate_spectrum(const ShellConfig& cfg, const ScanPlan& plan);

struct SplittingOptions {
  double r1 = 1.0;
  double alpha1 = -3.0;
  std::vector<double> d_grid;
};

/// Tunes alpha2 = -2 k0, resolves the kappa_+/- pair for each d, and fits
/// the gap decay exponent. Unresolvable d values are dropped and the first
/// such d recorded.
SplittingReport splitting_curve(const SplittingOptions& opts, const ScanPlan& plan,
                                std::optional<double>* d_unresolved_from = nullptr);

/// Agmon action across the gap: kappa0 * (R2 - R1).
double agmon_distance(double kappa0, double r1, double r2);

}  // namespace ds

#endif
