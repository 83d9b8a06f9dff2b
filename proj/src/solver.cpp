#include "deltashell/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "deltashell/boundary.hpp"

namespace ds {

namespace {

// Safeguarded secant/bisection refinement of a bracketed sign change.
// Returns the root location; the bracket is assumed valid (fa * fb < 0).
double refine_root(const std::function<double(double)>& f, double a, double b,
                   double fa, double fb, double tol) {
  double c = a, fc = fa;  // previous iterate for the secant step
  for (int it = 0; it < 200 && (b - a) > tol; ++it) {
    double mid = 0.5 * (a + b);
    double x = mid;
    if (fb != fc) {
      double s = b - fb * (b - c) / (fb - fc);
      if (s > a + 0.1 * tol && s < b - 0.1 * tol) x = s;
    }
    double fx = f(x);
    c = b;
    fc = fb;
    if (fx == 0.0) return x;
    if ((fa < 0.0) != (fx < 0.0)) {
      b = x;
      fb = fx;
    } else {
      a = x;
      fa = fx;
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  double ratio = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo * std::exp(ratio * i);
  g.back() = hi;
  return g;
}

}  // namespace

const ScanPlan& validate_plan(const ScanPlan& plan) {
  if (!(plan.kappa_min > 0.0) || !(plan.kappa_min < plan.kappa_max) ||
      plan.grid_points < 16 || plan.ell_max < 0 || !(plan.tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "invalid scan plan");
  }
  return plan;
}

double channel_function(const ShellConfig& cfg, int ell, double kappa) {
  if (ell == 0 && cfg.size() == 2) return split_form(kappa, cfg).scaled();
  return secular_det(cfg, ell, kappa);
}

ChannelScan find_channel_roots(const ShellConfig& cfg, int ell, const ScanPlan& plan) {
  validate_config(cfg);
  validate_plan(plan);
  auto f = [&](double k) { return channel_function(cfg, ell, k); };

  ChannelScan scan;
  auto grid = geometric_grid(plan.kappa_min, plan.kappa_max, plan.grid_points);
  std::vector<double> fv(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) fv[i] = f(grid[i]);

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (fv[i] == 0.0) {
      scan.roots.push_back({grid[i], 0.0});
      continue;
    }
    if ((fv[i] < 0.0) != (fv[i + 1] < 0.0)) {
      double r = refine_root(f, grid[i], grid[i + 1], fv[i], fv[i + 1], plan.tol);
      scan.roots.push_back({r, std::abs(f(r))});
    } else if (i > 0 && std::abs(fv[i]) < std::abs(fv[i - 1]) &&
               std::abs(fv[i]) < std::abs(fv[i + 1])) {
      // Local minimum of |f| without a sign change: probe at 32x resolution
      // for a pair of roots hiding in one cell, and flag near-tangencies.
      double lo = grid[i - 1], hi = grid[i + 1];
      int probes = 64;
      double prev = fv[i - 1];
      double prev_k = lo;
      bool found = false;
      for (int p = 1; p <= probes; ++p) {
        double k = lo + (hi - lo) * p / probes;
        double v = f(k);
        if ((prev < 0.0) != (v < 0.0)) {
          double r = refine_root(f, prev_k, k, prev, v, plan.tol);
          scan.roots.push_back({r, std::abs(f(r))});
          scan.grid_too_coarse = true;
          found = true;
        }
        prev = v;
        prev_k = k;
      }
      if (!found && std::abs(fv[i]) < 1e-6 && cfg.size() == 2 && ell == 0) {
        scan.near_tangencies.push_back({grid[i], double_root_residual(grid[i], cfg)});
      }
    }
  }

  std::sort(scan.roots.begin(), scan.roots.end(),
            [](const ChannelRoot& a, const ChannelRoot& b) { return a.kappa < b.kappa; });
  std::vector<ChannelRoot> merged;
  for (const auto& r : scan.roots) {
    if (!merged.empty() && r.kappa - merged.back().kappa < 10.0 * plan.tol) continue;
    merged.push_back(r);
  }
  scan.roots = std::move(merged);
  return scan;
}

Spectrum enumerate_spectrum(const ShellConfig& cfg, const ScanPlan& plan) {
  validate_config(cfg);
  validate_plan(plan);
  Spectrum spec;
  for (int ell = 0; ell <= plan.ell_max; ++ell) {
    ChannelScan scan = find_channel_roots(cfg, ell, plan);
    spec.per_channel_counts.push_back({ell, static_cast<int>(scan.roots.size())});
    if (scan.roots.empty()) break;
    for (const auto& r : scan.roots) {
      spec.states.push_back(BoundState{ell, r.kappa, -r.kappa * r.kappa,
                                       2 * ell + 1, r.residual});
    }
    if (ell == plan.ell_max) spec.ell_max_reached = true;
  }
  std::sort(spec.states.begin(), spec.states.end(),
            [](const BoundState& a, const BoundState& b) {
              if (a.energy != b.energy) return a.energy < b.energy;
              return a.ell < b.ell;
            });
  return spec;
}

SplittingReport splitting_curve(const SplittingOptions& opts, const ScanPlan& plan,
                                std::optional<double>* d_unresolved_from) {
  validate_plan(plan);
  if (opts.d_grid.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty d grid");
  }
  auto [k0, a2] = tune_for_splitting(opts.r1, opts.alpha1);
  double c = splitting_constant(opts.r1, opts.alpha1);

  SplittingReport rep;
  rep.kappa0 = k0;
  rep.alpha2_tuned = a2;
  rep.c_const = c;

  double window = 10.0 * c * std::exp(-k0 * opts.d_grid.front());
  std::optional<double> cutoff;
  for (double d : opts.d_grid) {
    if (cutoff) break;
    ShellConfig cfg{{opts.r1, opts.r1 + d}, {opts.alpha1, a2}};
    auto s = [&](double k) { return split_form(k, cfg).scaled(); };
    // S(k0) < 0 and S > 0 at the window edges, so each half-window brackets
    // one of the pair.
    double f0 = s(k0);
    double flo = s(k0 - window);
    double fhi = s(k0 + window);
    if (!(f0 < 0.0) || !(flo > 0.0) || !(fhi > 0.0)) {
      cutoff = d;
      break;
    }
    double km = refine_root(s, k0 - window, k0, flo, f0, plan.tol);
    double kp = refine_root(s, k0, k0 + window, f0, fhi, plan.tol);
    if (kp - km < 10.0 * plan.tol) {
      cutoff = d;
      break;
    }
    double gap = std::abs(kp * kp - km * km);
    double pred = 4.0 * k0 * c * std::exp(-k0 * d);
    rep.rows.push_back({d, kp, km, gap, pred});
  }
  if (d_unresolved_from) *d_unresolved_from = cutoff;
  if (rep.rows.empty()) {
    throw Error(ErrorCode::RootsNotResolved,
                "kappa pair unresolved at every requested d");
  }

  // Least-squares fit of log(gap) against d; slope estimates -kappa0.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double n = static_cast<double>(rep.rows.size());
  for (const auto& row : rep.rows) {
    double y = std::log(row.gap);
    sx += row.d;
    sy += y;
    sxx += row.d * row.d;
    sxy += row.d * y;
  }
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  rep.fitted_exponent = -slope;
  return rep;
}

double agmon_distance(double kappa0, double r1, double r2) {
  if (!(kappa0 > 0.0) || !(r1 > 0.0) || !(r2 > r1)) {
    throw Error(ErrorCode::InvalidArgument, "need kappa0 > 0 and R2 > R1 > 0");
  }
  return kappa0 * (r2 - r1);
}

}  // namespace ds
