#include "deltashell/secular.hpp"

#include <cmath>

#include "deltashell/specfun.hpp"

namespace ds {

namespace {

void require_two_shells(const ShellConfig& cfg) {
  validate_config(cfg);
  if (cfg.size() != 2) {
    throw Error(ErrorCode::WrongShellCount,
                "two-shell s-wave machinery requires N = 2");
  }
}

// Unique positive root of k + gamma1(k); requires alpha1 < -1/r1.
double inner_root(double r1, double alpha1) {
  if (!(alpha1 < -1.0 / r1)) {
    throw Error(ErrorCode::NoInnerBoundState,
                "no inner one-shell bound state: alpha1 >= -1/R1");
  }
  auto h = [&](double k) { return k + gamma1(k, r1, alpha1); };
  double lo = 1e-12;
  double hi = std::max(1.0 / r1, -alpha1) + 1.0;
  while (h(hi) <= 0.0) hi *= 2.0;
  // h is strictly increasing, so plain bisection converges unconditionally.
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (h(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-15 * hi) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double gamma1(double kappa, double r1, double alpha1) {
  return alpha1 + kappa * coth_stable(kappa * r1);
}

double gamma1_prime(double kappa, double r1) {
  double t = kappa * r1;
  return coth_stable(t) - t * csch_sq_stable(t);
}

double f_infinity(double kappa, double r1, double alpha1, double alpha2) {
  return (kappa + gamma1(kappa, r1, alpha1)) * (2.0 * kappa + alpha2) / kappa;
}

double f_infinity_prime(double kappa, double r1, double alpha1, double alpha2) {
  double p = kappa + gamma1(kappa, r1, alpha1);
  double pp = 1.0 + gamma1_prime(kappa, r1);
  double q = 2.0 + alpha2 / kappa;
  double qp = -alpha2 / (kappa * kappa);
  return pp * q + p * qp;
}

double f_infinity_second(double kappa, double r1, double alpha1, double alpha2) {
  double t = kappa * r1;
  double p = kappa + gamma1(kappa, r1, alpha1);
  double pp = 1.0 + gamma1_prime(kappa, r1);
  double ppp = 2.0 * r1 * csch_sq_stable(t) * (t * coth_stable(t) - 1.0);
  double q = 2.0 + alpha2 / kappa;
  double qp = -alpha2 / (kappa * kappa);
  double qpp = 2.0 * alpha2 / (kappa * kappa * kappa);
  return ppp * q + 2.0 * pp * qp + p * qpp;
}

double g_function(double kappa, double r1, double alpha1, double alpha2) {
  return alpha2 * (1.0 - gamma1(kappa, r1, alpha1) / kappa);
}

double SplitForm::scaled() const { return f_inf + g * std::exp(-2.0 * kappa * d); }

SplitForm split_form(double kappa, const ShellConfig& cfg) {
  require_two_shells(cfg);
  double r1 = cfg.radii[0];
  double a1 = cfg.alphas[0];
  double a2 = cfg.alphas[1];
  return SplitForm{f_infinity(kappa, r1, a1, a2), g_function(kappa, r1, a1, a2),
                   kappa, separation(cfg)};
}

double secular_F(double kappa, const ShellConfig& cfg) {
  require_two_shells(cfg);
  double d = separation(cfg);
  double r1 = cfg.radii[0];
  double a1 = cfg.alphas[0];
  double a2 = cfg.alphas[1];
  double g1 = gamma1(kappa, r1, a1);
  double kd = kappa * d;
  if (kd > 30.0) {
    double fi = f_infinity(kappa, r1, a1, a2);
    double gg = g_function(kappa, r1, a1, a2);
    double grow = std::exp(std::min(kd, 700.0));
    return 0.5 * (fi * grow + gg * std::exp(-kd));
  }
  double a = g1 + a2 + kappa;
  double b = kappa + g1 + a2 * g1 / kappa;
  return a * std::cosh(kd) + b * std::sinh(kd);
}

std::array<double, 4> matching_matrix(double kappa, const ShellConfig& cfg) {
  require_two_shells(cfg);
  double d = separation(cfg);
  double kd = kappa * d;
  if (kd > 700.0) {
    throw Error(ErrorCode::Overflow,
                "cosh(k d) overflows; use the split form instead");
  }
  double g1 = gamma1(kappa, cfg.radii[0], cfg.alphas[0]);
  double a2 = cfg.alphas[1];
  double ch = std::cosh(kd);
  double sh = std::sinh(kd);
  return {-g1, kappa, (a2 + kappa) * ch + kappa * sh,
          (a2 + kappa) * sh + kappa * ch};
}

OneShellRoots one_shell_roots(const ShellConfig& cfg) {
  require_two_shells(cfg);
  OneShellRoots out;
  double r1 = cfg.radii[0];
  double a1 = cfg.alphas[0];
  double a2 = cfg.alphas[1];
  if (a1 < -1.0 / r1) out.kappa_in = inner_root(r1, a1);
  if (a2 < 0.0) out.kappa_out = -a2 / 2.0;
  out.outer_bound = a2 < -1.0 / cfg.radii[1];
  return out;
}

double large_d_correction(const ShellConfig& cfg, RootSide which) {
  require_two_shells(cfg);
  OneShellRoots roots = one_shell_roots(cfg);
  double r1 = cfg.radii[0];
  double a1 = cfg.alphas[0];
  double a2 = cfg.alphas[1];
  double k;
  if (which == RootSide::In) {
    if (!roots.kappa_in)
      throw Error(ErrorCode::NoInnerBoundState, "inner one-shell root absent");
    k = *roots.kappa_in;
  } else {
    if (!roots.kappa_out)
      throw Error(ErrorCode::NoInnerBoundState, "outer one-shell root absent");
    k = *roots.kappa_out;
  }
  double fp = f_infinity_prime(k, r1, a1, a2);
  if (std::abs(fp) < 1e-12) {
    throw Error(ErrorCode::DegenerateRoot,
                "F_inf' vanishes at the one-shell root (tuned case)");
  }
  return -g_function(k, r1, a1, a2) / fp;
}

std::pair<double, double> tune_for_splitting(double r1, double alpha1) {
  double k0 = inner_root(r1, alpha1);
  return {k0, -2.0 * k0};
}

double splitting_constant(double r1, double alpha1) {
  auto [k0, a2] = tune_for_splitting(r1, alpha1);
  double g1p = gamma1_prime(k0, r1);
  double c = k0 * std::sqrt(2.0 / (1.0 + g1p));

  // Cross-check against Richardson-extrapolated second differencing of F_inf.
  auto fi = [&](double k) { return f_infinity(k, r1, alpha1, a2); };
  auto d2 = [&](double h) {
    return (fi(k0 + h) - 2.0 * fi(k0) + fi(k0 - h)) / (h * h);
  };
  double h = 1e-3 * k0;
  double fpp = (4.0 * d2(h / 2.0) - d2(h)) / 3.0;
  double g0 = g_function(k0, r1, alpha1, a2);
  double c_num = std::sqrt(-2.0 * g0 / fpp);
  if (std::abs(c - c_num) > 1e-8 * std::abs(c)) {
    throw Error(ErrorCode::InvalidArgument,
                "splitting constant cross-check failed");
  }
  return c;
}

std::pair<double, double> double_root_residual(double kappa, const ShellConfig& cfg) {
  require_two_shells(cfg);
  double d = separation(cfg);
  double kd = kappa * d;
  if (kd > 700.0) {
    throw Error(ErrorCode::Overflow, "cosh(k d) overflows");
  }
  double r1 = cfg.radii[0];
  double a1 = cfg.alphas[0];
  double a2 = cfg.alphas[1];
  double g1 = gamma1(kappa, r1, a1);
  double g1p = gamma1_prime(kappa, r1);
  double a = g1 + a2 + kappa;
  double b = kappa + g1 + a2 * g1 / kappa;
  double ap = g1p + 1.0;
  double bp = 1.0 + g1p + a2 * (g1p * kappa - g1) / (kappa * kappa);
  double ch = std::cosh(kd);
  double sh = std::sinh(kd);
  double f = a * ch + b * sh;
  double fprime = (ap + d * b) * ch + (bp + d * a) * sh;
  return {f, fprime};
}

}  // namespace ds
