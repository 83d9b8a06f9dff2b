#include "deltashell.h"

#include <cstring>
#include <exception>
#include <optional>
#include <string>

#include "deltashell/boundary.hpp"
#include "deltashell/calibrate.hpp"
#include "deltashell/model.hpp"
#include "deltashell/oracle.hpp"
#include "deltashell/secular.hpp"
#include "deltashell/solver.hpp"

struct ds_config {
  ds::ShellConfig cfg;
};

struct ds_spectrum {
  ds::Spectrum spec;
};

struct ds_splitting {
  ds::SplittingReport rep;
  std::optional<double> unresolved_from;
};

namespace {

thread_local std::string g_last_error;
thread_local long g_last_index = -1;

ds_status map_code(ds::ErrorCode c) {
  using EC = ds::ErrorCode;
  switch (c) {
    case EC::NonIncreasingRadii: return DS_ERR_NON_INCREASING_RADII;
    case EC::NonPositiveRadius: return DS_ERR_NON_POSITIVE_RADIUS;
    case EC::LengthMismatch: return DS_ERR_LENGTH_MISMATCH;
    case EC::NonFiniteCoupling: return DS_ERR_NON_FINITE_COUPLING;
    case EC::WrongShellCount: return DS_ERR_WRONG_SHELL_COUNT;
    case EC::Overflow: return DS_ERR_OVERFLOW;
    case EC::UnsupportedOrder: return DS_ERR_UNSUPPORTED_ORDER;
    case EC::SWaveThresholdForbidden: return DS_ERR_SWAVE_THRESHOLD_FORBIDDEN;
    case EC::NoInnerBoundState: return DS_ERR_NO_INNER_BOUND_STATE;
    case EC::DegenerateRoot: return DS_ERR_DEGENERATE_ROOT;
    case EC::EllMaxReached: return DS_ERR_ELL_MAX_REACHED;
    case EC::RootsNotResolved: return DS_ERR_ROOTS_NOT_RESOLVED;
    case EC::SingularWronskian: return DS_ERR_SINGULAR_WRONSKIAN;
    case EC::NotARoot: return DS_ERR_NOT_A_ROOT;
    case EC::InvalidArgument: return DS_ERR_INVALID_ARGUMENT;
  }
  return DS_ERR_INTERNAL;
}

template <typename F>
ds_status guarded(F&& f) {
  try {
    g_last_error.clear();
    g_last_index = -1;
    f();
    return DS_OK;
  } catch (const ds::Error& e) {
    g_last_error = e.what();
    g_last_index = e.index();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    g_last_index = -1;
    return DS_ERR_INTERNAL;
  }
}

ds::ScanPlan to_plan(const ds_plan* plan) {
  ds::ScanPlan p;
  if (plan) {
    p.kappa_min = plan->kappa_min;
    p.kappa_max = plan->kappa_max;
    p.grid_points = plan->grid_points;
    p.ell_max = plan->ell_max;
    p.tol = plan->tol;
  }
  return p;
}

}  // namespace

extern "C" {

const char* ds_version(void) { return "deltashell 1.0.0"; }

const char* ds_status_name(ds_status s) {
  switch (s) {
    case DS_OK: return "ok";
    case DS_ERR_NON_INCREASING_RADII: return "NonIncreasingRadii";
    case DS_ERR_NON_POSITIVE_RADIUS: return "NonPositiveRadius";
    case DS_ERR_LENGTH_MISMATCH: return "LengthMismatch";
    case DS_ERR_NON_FINITE_COUPLING: return "NonFiniteCoupling";
    case DS_ERR_WRONG_SHELL_COUNT: return "WrongShellCount";
    case DS_ERR_OVERFLOW: return "Overflow";
    case DS_ERR_UNSUPPORTED_ORDER: return "UnsupportedOrder";
    case DS_ERR_SWAVE_THRESHOLD_FORBIDDEN: return "SWaveThresholdForbidden";
    case DS_ERR_NO_INNER_BOUND_STATE: return "NoInnerBoundState";
    case DS_ERR_DEGENERATE_ROOT: return "DegenerateRoot";
    case DS_ERR_ELL_MAX_REACHED: return "EllMaxReached";
    case DS_ERR_ROOTS_NOT_RESOLVED: return "RootsNotResolved";
    case DS_ERR_SINGULAR_WRONSKIAN: return "SingularWronskian";
    case DS_ERR_NOT_A_ROOT: return "NotARoot";
    case DS_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    default: return "Internal";
  }
}

const char* ds_last_error(void) { return g_last_error.c_str(); }

long ds_last_error_index(void) { return g_last_index; }

void ds_plan_default(ds_plan* plan) {
  if (!plan) return;
  ds::ScanPlan p;
  plan->kappa_min = p.kappa_min;
  plan->kappa_max = p.kappa_max;
  plan->grid_points = p.grid_points;
  plan->ell_max = p.ell_max;
  plan->tol = p.tol;
}

ds_status ds_config_create(const double* radii, const double* alphas, size_t n,
                           ds_config** out) {
  return guarded([&] {
    if (!radii || !alphas || !out) {
      throw ds::Error(ds::ErrorCode::InvalidArgument, "null pointer");
    }
    ds::ShellConfig cfg{{radii, radii + n}, {alphas, alphas + n}};
    ds::validate_config(cfg);
    *out = new ds_config{std::move(cfg)};
  });
}

void ds_config_free(ds_config* cfg) { delete cfg; }

size_t ds_config_size(const ds_config* cfg) { return cfg ? cfg->cfg.size() : 0; }

ds_status ds_config_separation(const ds_config* cfg, double* out) {
  return guarded([&] { *out = ds::separation(cfg->cfg); });
}

ds_status ds_secular_det(const ds_config* cfg, int ell, double kappa, double* out) {
  return guarded([&] { *out = ds::secular_det(cfg->cfg, ell, kappa); });
}

ds_status ds_secular_f(const ds_config* cfg, double kappa, double* out) {
  return guarded([&] { *out = ds::secular_F(kappa, cfg->cfg); });
}

ds_status ds_scaled_secular(const ds_config* cfg, double kappa, double* out) {
  return guarded([&] { *out = ds::split_form(kappa, cfg->cfg).scaled(); });
}

ds_status ds_matching_det(const ds_config* cfg, double kappa, double* out) {
  return guarded([&] {
    auto m = ds::matching_matrix(kappa, cfg->cfg);
    *out = m[0] * m[3] - m[1] * m[2];
  });
}

ds_status ds_mismatch(const ds_config* cfg, int ell, double kappa, double* out) {
  return guarded([&] { *out = ds::mismatch(cfg->cfg, ell, kappa); });
}

ds_status ds_threshold(const ds_config* cfg, int ell, double* det,
                       int* kernel_dim, int* multiplicity) {
  return guarded([&] {
    ds::ChannelMatrix a = ds::threshold_matrix(cfg->cfg, ell);
    int kd = ds::kernel_dimension(a);
    if (det) *det = ds::threshold_det(cfg->cfg, ell);
    if (kernel_dim) *kernel_dim = kd;
    if (multiplicity) *multiplicity = (2 * ell + 1) * kd;
  });
}

ds_status ds_solve_spectrum(const ds_config* cfg, const ds_plan* plan,
                            ds_spectrum** out) {
  return guarded([&] {
    *out = new ds_spectrum{ds::enumerate_spectrum(cfg->cfg, to_plan(plan))};
  });
}

void ds_spectrum_free(ds_spectrum* s) { delete s; }

size_t ds_spectrum_size(const ds_spectrum* s) { return s ? s->spec.states.size() : 0; }

ds_status ds_spectrum_state(const ds_spectrum* s, size_t i, ds_bound_state* out) {
  return guarded([&] {
    if (!s || i >= s->spec.states.size()) {
      throw ds::Error(ds::ErrorCode::InvalidArgument, "state index out of range");
    }
    const ds::BoundState& b = s->spec.states[i];
    *out = ds_bound_state{b.ell, b.kappa, b.energy, b.degeneracy, b.residual};
  });
}

int ds_spectrum_num_channels(const ds_spectrum* s) {
  return s ? static_cast<int>(s->spec.per_channel_counts.size()) : 0;
}

ds_status ds_spectrum_channel(const ds_spectrum* s, int i, int* ell, int* count) {
  return guarded([&] {
    if (!s || i < 0 || i >= static_cast<int>(s->spec.per_channel_counts.size())) {
      throw ds::Error(ds::ErrorCode::InvalidArgument, "channel index out of range");
    }
    if (ell) *ell = s->spec.per_channel_counts[static_cast<size_t>(i)].first;
    if (count) *count = s->spec.per_channel_counts[static_cast<size_t>(i)].second;
  });
}

int ds_spectrum_ell_max_reached(const ds_spectrum* s) {
  return s && s->spec.ell_max_reached ? 1 : 0;
}

ds_status ds_find_channel_roots(const ds_config* cfg, int ell, const ds_plan* plan,
                                double* roots, size_t cap, size_t* n_roots) {
  return guarded([&] {
    ds::ChannelScan scan = ds::find_channel_roots(cfg->cfg, ell, to_plan(plan));
    if (n_roots) *n_roots = scan.roots.size();
    if (roots) {
      for (size_t i = 0; i < scan.roots.size() && i < cap; ++i) {
        roots[i] = scan.roots[i].kappa;
      }
    }
  });
}

ds_status ds_tune_splitting(double r1, double alpha1, double* kappa0,
                            double* alpha2, double* c_const) {
  return guarded([&] {
    auto [k0, a2] = ds::tune_for_splitting(r1, alpha1);
    if (kappa0) *kappa0 = k0;
    if (alpha2) *alpha2 = a2;
    if (c_const) *c_const = ds::splitting_constant(r1, alpha1);
  });
}

ds_status ds_splitting_curve(double r1, double alpha1, const double* d_grid,
                             size_t nd, const ds_plan* plan, ds_splitting** out) {
  return guarded([&] {
    ds::SplittingOptions opts;
    opts.r1 = r1;
    opts.alpha1 = alpha1;
    opts.d_grid.assign(d_grid, d_grid + nd);
    std::optional<double> cut;
    ds::SplittingReport rep = ds::splitting_curve(opts, to_plan(plan), &cut);
    *out = new ds_splitting{std::move(rep), cut};
  });
}

void ds_splitting_free(ds_splitting* s) { delete s; }

size_t ds_splitting_rows(const ds_splitting* s) { return s ? s->rep.rows.size() : 0; }

ds_status ds_splitting_row_get(const ds_splitting* s, size_t i,
                               ds_splitting_row* out) {
  return guarded([&] {
    if (!s || i >= s->rep.rows.size()) {
      throw ds::Error(ds::ErrorCode::InvalidArgument, "row index out of range");
    }
    const ds::SplittingRow& r = s->rep.rows[i];
    *out = ds_splitting_row{r.d, r.kappa_plus, r.kappa_minus, r.gap, r.predicted_gap};
  });
}

ds_status ds_splitting_info(const ds_splitting* s, double* kappa0, double* alpha2,
                            double* c_const, double* fitted_exponent) {
  return guarded([&] {
    if (kappa0) *kappa0 = s->rep.kappa0;
    if (alpha2) *alpha2 = s->rep.alpha2_tuned;
    if (c_const) *c_const = s->rep.c_const;
    if (fitted_exponent) *fitted_exponent = s->rep.fitted_exponent;
  });
}

int ds_splitting_unresolved_from(const ds_splitting* s, double* d_out) {
  if (!s || !s->unresolved_from) return 0;
  if (d_out) *d_out = *s->unresolved_from;
  return 1;
}

ds_status ds_agmon_distance(double kappa0, double r1, double r2, double* out) {
  return guarded([&] { *out = ds::agmon_distance(kappa0, r1, r2); });
}

ds_status ds_reference_energy(double mass_ratio, double l0_nm, double* out) {
  return guarded([&] { *out = ds::reference_energy(mass_ratio, l0_nm); });
}

ds_status ds_coupling_from_interface(double delta_v_ev, double width_nm,
                                     double mass_ratio, double l0_nm, double* out) {
  return guarded([&] {
    ds::CalibrationInput in{delta_v_ev, width_nm, mass_ratio, l0_nm};
    *out = ds::coupling_from_interface(in);
  });
}

const char* ds_classify_alignment(double alpha1, double alpha2) {
  switch (ds::classify_alignment(alpha1, alpha2)) {
    case ds::Alignment::TypeI: return "TypeI";
    case ds::Alignment::TypeII: return "TypeII";
    default: return "Other";
  }
}

ds_status ds_preset(const char* name, double* r1, double* r2, double* alpha1,
                    double* alpha2, double* mass_ratio, double* l0_nm) {
  return guarded([&] {
    if (!name) throw ds::Error(ds::ErrorCode::InvalidArgument, "null preset name");
    ds::CalibrationPreset p = ds::preset(name);
    if (r1) *r1 = p.config.radii[0];
    if (r2) *r2 = p.config.radii[1];
    if (alpha1) *alpha1 = p.config.alphas[0];
    if (alpha2) *alpha2 = p.config.alphas[1];
    if (mass_ratio) *mass_ratio = p.mass_ratio;
    if (l0_nm) *l0_nm = p.l0_nm;
  });
}

}  // extern "C"
