#ifndef DELTASHELL_SPECFUN_HPP
#define DELTASHELL_SPECFUN_HPP

#include "deltashell/errors.hpp"

namespace ds {

/// Highest supported order for the modified spherical Bessel family.
inline constexpr int kEllMax = 64;

/// Negative-energy radial Green factor
///   value = kappa * i_l(kappa r_<) * k_l(kappa r_>),
/// the real, positive form of ik j_l(k r_<) h1_l(k r_>) at k = i kappa.
struct GreenFactor {
  int ell;
  double kappa;
  double r_small;
  double r_large;
  double value;
};

/// Modified spherical Bessel function of the first kind, i_0(x) = sinh(x)/x.
/// Miller downward recurrence normalized at i_0; relative error <= 1e-12 on
/// x in [1e-8, 700], l <= kEllMax.
double sph_i(int ell, double x);

/// Modified spherical Bessel function of the second kind in the convention
/// k_0(x) = exp(-x)/x (no pi/2 factor); upward recurrence.
double sph_k(int ell, double x);

/// exp(-x) * i_l(x): finite for every x > 0, used by overflow-safe callers.
double sph_i_scaled(int ell, double x);

/// exp(+x) * k_l(x): a rational function of 1/x, finite for every x > 0.
double sph_k_scaled(int ell, double x);

/// Derivatives from the recurrence relations:
///   i_l'(x) = i_{l-1}(x) - (l+1)/x i_l(x), with i_{-1}(x) = cosh(x)/x,
///   k_l'(x) = -k_{l-1}(x) - (l+1)/x k_l(x), with k_{-1}(x) = k_0(x).
double sph_i_prime(int ell, double x);
double sph_k_prime(int ell, double x);
double sph_i_prime_scaled(int ell, double x);
double sph_k_prime_scaled(int ell, double x);

/// coth(x) without overflow for large x and without cancellation for small x.
double coth_stable(double x);

/// csch(x)^2, computed through exp(-x) so it underflows gracefully.
double csch_sq_stable(double x);

GreenFactor green_factor(int ell, double kappa, double a, double b);

}  // namespace ds

#endif
