/* deltashell: bound states of Schrodinger operators with concentric
 * spherical delta-shell interactions.
 *
 * C API over the C++ core. All handles are opaque; every fallible call
 * returns a ds_status and writes results through out-pointers. The last
 * error message is kept per thread (ds_last_error).
 */
#ifndef DELTASHELL_H
#define DELTASHELL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ds_status {
  DS_OK = 0,
  DS_ERR_NON_INCREASING_RADII,
  DS_ERR_NON_POSITIVE_RADIUS,
  DS_ERR_LENGTH_MISMATCH,
  DS_ERR_NON_FINITE_COUPLING,
  DS_ERR_WRONG_SHELL_COUNT,
  DS_ERR_OVERFLOW,
  DS_ERR_UNSUPPORTED_ORDER,
  DS_ERR_SWAVE_THRESHOLD_FORBIDDEN,
  DS_ERR_NO_INNER_BOUND_STATE,
  DS_ERR_DEGENERATE_ROOT,
  DS_ERR_ELL_MAX_REACHED,
  DS_ERR_ROOTS_NOT_RESOLVED,
  DS_ERR_SINGULAR_WRONSKIAN,
  DS_ERR_NOT_A_ROOT,
  DS_ERR_INVALID_ARGUMENT,
  DS_ERR_INTERNAL
} ds_status;

typedef struct ds_config ds_config;
typedef struct ds_spectrum ds_spectrum;
typedef struct ds_splitting ds_splitting;

typedef struct ds_plan {
  double kappa_min;  /* default 1e-6 */
  double kappa_max;  /* default 50 */
  int grid_points;   /* default 2000, geometric spacing */
  int ell_max;       /* default 32 */
  double tol;        /* default 1e-12, on kappa */
} ds_plan;

typedef struct ds_bound_state {
  int ell;
  double kappa;
  double energy; /* -kappa^2 */
  int degeneracy;
  double residual;
} ds_bound_state;

typedef struct ds_splitting_row {
  double d;
  double kappa_plus;
  double kappa_minus;
  double gap;           /* |k+^2 - k-^2| */
  double predicted_gap; /* 4 k0 C e^{-k0 d} */
} ds_splitting_row;

const char* ds_version(void);
const char* ds_status_name(ds_status s);
/* Message and config index (or -1) from the last failing call on this thread. */
const char* ds_last_error(void);
long ds_last_error_index(void);

void ds_plan_default(ds_plan* plan);

/* --- configuration ------------------------------------------------------ */
ds_status ds_config_create(const double* radii, const double* alphas, size_t n,
                           ds_config** out);
void ds_config_free(ds_config* cfg);
size_t ds_config_size(const ds_config* cfg);
ds_status ds_config_separation(const ds_config* cfg, double* out);

/* --- secular functions -------------------------------------------------- */
/* det(I + m_l(-kappa^2) diag(alpha_j R_j^2)) */
ds_status ds_secular_det(const ds_config* cfg, int ell, double kappa, double* out);
/* Two-shell s-wave F_d(kappa) */
ds_status ds_secular_f(const ds_config* cfg, double kappa, double* out);
/* Scaled form S(kappa) = F_inf + G e^{-2 kappa d}; same zeros as F_d */
ds_status ds_scaled_secular(const ds_config* cfg, double kappa, double* out);
/* det of the 2x2 matching matrix M(kappa; d) = -kappa F_d(kappa) */
ds_status ds_matching_det(const ds_config* cfg, double kappa, double* out);
/* Independent transfer-matrix mismatch; zero iff eigenvalue */
ds_status ds_mismatch(const ds_config* cfg, int ell, double kappa, double* out);

/* --- zero-energy threshold (ell >= 1) ----------------------------------- */
ds_status ds_threshold(const ds_config* cfg, int ell, double* det,
                       int* kernel_dim, int* multiplicity);

/* --- spectrum ----------------------------------------------------------- */
ds_status ds_solve_spectrum(const ds_config* cfg, const ds_plan* plan,
                            ds_spectrum** out);
void ds_spectrum_free(ds_spectrum* s);
size_t ds_spectrum_size(const ds_spectrum* s);
ds_status ds_spectrum_state(const ds_spectrum* s, size_t i, ds_bound_state* out);
int ds_spectrum_num_channels(const ds_spectrum* s);
/* count for the i-th scanned channel; also writes the ell index */
ds_status ds_spectrum_channel(const ds_spectrum* s, int i, int* ell, int* count);
int ds_spectrum_ell_max_reached(const ds_spectrum* s);

ds_status ds_find_channel_roots(const ds_config* cfg, int ell, const ds_plan* plan,
                                double* roots, size_t cap, size_t* n_roots);

/* --- tunneling splitting ------------------------------------------------ */
ds_status ds_tune_splitting(double r1, double alpha1, double* kappa0,
                            double* alpha2, double* c_const);
ds_status ds_splitting_curve(double r1, double alpha1, const double* d_grid,
                             size_t nd, const ds_plan* plan, ds_splitting** out);
void ds_splitting_free(ds_splitting* s);
size_t ds_splitting_rows(const ds_splitting* s);
ds_status ds_splitting_row_get(const ds_splitting* s, size_t i,
                               ds_splitting_row* out);
ds_status ds_splitting_info(const ds_splitting* s, double* kappa0, double* alpha2,
                            double* c_const, double* fitted_exponent);
/* 1 and writes *d_out if some requested d could not be resolved */
int ds_splitting_unresolved_from(const ds_splitting* s, double* d_out);

ds_status ds_agmon_distance(double kappa0, double r1, double r2, double* out);

/* --- calibration -------------------------------------------------------- */
ds_status ds_reference_energy(double mass_ratio, double l0_nm, double* out);
ds_status ds_coupling_from_interface(double delta_v_ev, double width_nm,
                                     double mass_ratio, double l0_nm, double* out);
/* "TypeI", "TypeII" or "Other" */
const char* ds_classify_alignment(double alpha1, double alpha2);
ds_status ds_preset(const char* name, double* r1, double* r2, double* alpha1,
                    double* alpha2, double* mass_ratio, double* l0_nm);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DELTASHELL_H */
