#ifndef DELTASHELL_SECULAR_HPP
#define DELTASHELL_SECULAR_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "deltashell/model.hpp"

namespace ds {

/// Overflow-safe decomposition 2 F_d(k) = f_inf e^{kd} + g e^{-kd}.
struct SplitForm {
  double f_inf;  // F_inf(k) = (k + gamma1(k)) (2k + alpha2) / k
  double g;      // G(k) = alpha2 (1 - gamma1(k)/k)
  double kappa;
  double d;

  /// Scaled secular function S(k) = F_inf + G e^{-2kd}; same zeros and sign
  /// as F_d, representable for arbitrarily large d.
  double scaled() const;
};

/// Tuned-parameter tunneling analysis output.
struct SplittingRow {
  double d;
  double kappa_plus;
  double kappa_minus;
  double gap;            // |k+^2 - k-^2|
  double predicted_gap;  // 4 k0 C e^{-k0 d}
};

struct SplittingReport {
  double kappa0 = 0.0;
  double alpha2_tuned = 0.0;
  double c_const = 0.0;
  double fitted_exponent = 0.0;  // slope of log(gap) vs d, sign flipped
  std::vector<SplittingRow> rows;
};

/// gamma1(k) = alpha1 + k coth(k R1); continuous limit alpha1 + 1/R1 at k->0.
double gamma1(double kappa, double r1, double alpha1);

/// d gamma1 / dk = coth(k R1) - k R1 csch^2(k R1), always > 0.
double gamma1_prime(double kappa, double r1);

/// Two-shell s-wave secular function F_d(k); evaluated through the split
/// form when k d > 30.
double secular_F(double kappa, const ShellConfig& cfg);

/// The 2x2 matching matrix M(k; d); det M = -k F_d(k).
std::array<double, 4> matching_matrix(double kappa, const ShellConfig& cfg);

SplitForm split_form(double kappa, const ShellConfig& cfg);

struct OneShellRoots {
  std::optional<double> kappa_in;   // root of k + gamma1(k), iff alpha1 < -1/R1
  std::optional<double> kappa_out;  // -alpha2/2, iff alpha2 < 0
  bool outer_bound = false;         // alpha2 < -1/R2, the true binding condition
};

OneShellRoots one_shell_roots(const ShellConfig& cfg);

enum class RootSide { In, Out };

/// Prefactor -G(k*)/F_inf'(k*) of the e^{-2 k* d} root drift.
double large_d_correction(const ShellConfig& cfg, RootSide which);

/// Tuning gamma1(k0) + k0 = 0, alpha2 = -2 k0.
std::pair<double, double> tune_for_splitting(double r1, double alpha1);

/// C = sqrt(-2 G(k0) / F_inf''(k0)) = k0 sqrt(2 / (1 + gamma1'(k0))),
/// cross-checked against second differencing of F_inf.
double splitting_constant(double r1, double alpha1);

/// (F_d(k), F_d'(k)); both vanish exactly at a multiple root.
std::pair<double, double> double_root_residual(double kappa, const ShellConfig& cfg);

/// F_inf and its first two derivatives (analytic forms).
double f_infinity(double kappa, double r1, double alpha1, double alpha2);
double f_infinity_prime(double kappa, double r1, double alpha1, double alpha2);
double f_infinity_second(double kappa, double r1, double alpha1, double alpha2);
double g_function(double kappa, double r1, double alpha1, double alpha2);

}  // namespace ds

#endif
