#include "deltashell/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace ds {

namespace {

void check_order(int ell) {
  if (ell < 0 || ell > kEllMax) {
    throw Error(ErrorCode::UnsupportedOrder,
                "order " + std::to_string(ell) + " outside [0, " +
                    std::to_string(kEllMax) + "]");
  }
}

void check_positive(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::InvalidArgument, "argument must be positive");
  }
}

// Coefficients of the terminating expansion
//   k_l(x) = e^{-x}/x * sum_{m=0}^{l} c_m x^{-m},
//   c_m = (l+m)! / (m! (l-m)! 2^m).
std::vector<double> poly_coeffs(int ell) {
  std::vector<double> c(static_cast<std::size_t>(ell) + 1);
  c[0] = 1.0;
  for (int m = 0; m < ell; ++m) {
    c[m + 1] = c[m] * (ell + m + 1) * (ell - m) / (2.0 * (m + 1));
  }
  return c;
}

// e^{-x} i_l(x) from the terminating expansion
//   i_l(x) = (1/2x) [ e^x sum (-1)^m c_m x^{-m} - (-1)^l e^{-x} sum c_m x^{-m} ].
// Alternating sum is safe once successive terms decrease, i.e. x >= l(l+1).
double i_scaled_closed(int ell, double x) {
  auto c = poly_coeffs(ell);
  double alt = 0.0, pos = 0.0, xm = 1.0;
  for (int m = 0; m <= ell; ++m) {
    double t = c[m] * xm;
    alt += (m % 2 ? -t : t);
    pos += t;
    xm /= x;
  }
  double sgn = (ell % 2 ? 1.0 : -1.0);
  return (alt + sgn * std::exp(-2.0 * x) * pos) / (2.0 * x);
}

// Miller downward recurrence for e^{-x} i_l(x), normalized at l = 0.
double i_scaled_miller(int ell, double x) {
  int start = std::max(ell, static_cast<int>(x)) + 32;
  double fp = 0.0;                 // f_{n+1}
  double fc = 1e-280;              // f_n
  double fell = (ell == start) ? fc : 0.0;
  for (int n = start; n > 0; --n) {
    double fm = fp + (2 * n + 1) * fc / x;  // f_{n-1}
    fp = fc;
    fc = fm;
    if (n - 1 == ell) fell = fc;
    if (std::abs(fc) > 1e250) {
      fc *= 1e-250;
      fp *= 1e-250;
      fell *= 1e-250;
    }
  }
  double i0s = -std::expm1(-2.0 * x) / (2.0 * x);
  return fell * (i0s / fc);
}

}  // namespace

double sph_i_scaled(int ell, double x) {
  check_order(ell);
  check_positive(x);
  if (ell == 0) return -std::expm1(-2.0 * x) / (2.0 * x);
  if (x >= static_cast<double>(ell) * (ell + 1)) return i_scaled_closed(ell, x);
  return i_scaled_miller(ell, x);
}

double sph_k_scaled(int ell, double x) {
  check_order(ell);
  check_positive(x);
  double k0 = 1.0 / x;
  if (ell == 0) return k0;
  double k1 = (1.0 + 1.0 / x) / x;
  for (int n = 1; n < ell; ++n) {
    double k2 = k0 + (2 * n + 1) * k1 / x;
    k0 = k1;
    k1 = k2;
  }
  return k1;
}

double sph_i(int ell, double x) {
  double s = sph_i_scaled(ell, x);
  if (x < 700.0) return s * std::exp(x);
  double lv = std::log(s) + x;
  if (lv > 709.7) {
    throw Error(ErrorCode::Overflow,
                "i_l overflows at x = " + std::to_string(x));
  }
  return s * std::exp(x - 8.0) * std::exp(8.0);
}

double sph_k(int ell, double x) {
  // exp(-x) underflow gives exact 0, the documented behavior.
  return sph_k_scaled(ell, x) * std::exp(-x);
}

double sph_i_prime_scaled(int ell, double x) {
  double im1 = (ell == 0)
                   ? (1.0 + std::exp(-2.0 * x)) / (2.0 * x)  // e^{-x} cosh(x)/x
                   : sph_i_scaled(ell - 1, x);
  return im1 - (ell + 1) * sph_i_scaled(ell, x) / x;
}

double sph_k_prime_scaled(int ell, double x) {
  double km1 = (ell == 0) ? sph_k_scaled(0, x) : sph_k_scaled(ell - 1, x);
  return -km1 - (ell + 1) * sph_k_scaled(ell, x) / x;
}

double sph_i_prime(int ell, double x) { return sph_i_prime_scaled(ell, x) * std::exp(x); }

double sph_k_prime(int ell, double x) { return sph_k_prime_scaled(ell, x) * std::exp(-x); }

double coth_stable(double x) {
  check_positive(x);
  if (x < 1e-4) {
    double x2 = x * x;
    return 1.0 / x + x / 3.0 - x * x2 / 45.0;
  }
  return 1.0 + 2.0 / std::expm1(2.0 * x);
}

double csch_sq_stable(double x) {
  check_positive(x);
  if (x < 1e-4) {
    double x2 = x * x;
    return 1.0 / x2 - 1.0 / 3.0 + x2 / 15.0;
  }
  double e = std::exp(-x);
  double s = 2.0 * e / (-std::expm1(-2.0 * x));  // 1/sinh(x)
  return s * s;
}

GreenFactor green_factor(int ell, double kappa, double a, double b) {
  check_positive(kappa);
  check_positive(a);
  check_positive(b);
  double rs = std::min(a, b);
  double rl = std::max(a, b);
  double xs = kappa * rs;
  double xl = kappa * rl;
  double is = sph_i_scaled(ell, xs);
  double ks = sph_k_scaled(ell, xl);
  double value;
  if (is > 0.0 && std::isfinite(ks)) {
    value = kappa * is * ks * std::exp(xs - xl);
  } else {
    // Extreme small-argument corner: i_l underflowed or k_l overflowed.
    // Use the zero-energy kernel limit r_<^l / ((2l+1) r_>^{l+1}).
    value = std::pow(rs / rl, ell) / ((2 * ell + 1) * rl);
  }
  return GreenFactor{ell, kappa, rs, rl, value};
}

}  // namespace ds
