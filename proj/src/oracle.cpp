#include "deltashell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "deltashell/specfun.hpp"

namespace ds {

void ScaledReal::normalize() {
  if (m == 0.0 || !std::isfinite(m)) return;
  double am = std::abs(m);
  if (am > 1e100 || am < 1e-100) {
    double shift = std::log(am);
    m *= std::exp(-shift);
    e += shift;
  }
}

ScaledReal ScaledReal::from(double v) {
  ScaledReal s{v, 0.0};
  s.normalize();
  return s;
}

ScaledReal ScaledReal::from(double mantissa, double log_scale) {
  ScaledReal s{mantissa, log_scale};
  s.normalize();
  return s;
}

double ScaledReal::to_double() const { return m * std::exp(e); }

double ScaledReal::log_abs() const {
  if (m == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(std::abs(m)) + e;
}

ScaledReal ScaledReal::operator*(const ScaledReal& o) const {
  ScaledReal r{m * o.m, e + o.e};
  r.normalize();
  return r;
}

ScaledReal ScaledReal::operator*(double s) const {
  ScaledReal r{m * s, e};
  r.normalize();
  return r;
}

ScaledReal ScaledReal::operator+(const ScaledReal& o) const {
  if (m == 0.0) return o;
  if (o.m == 0.0) return *this;
  const ScaledReal& big = (e >= o.e) ? *this : o;
  const ScaledReal& sml = (e >= o.e) ? o : *this;
  double shift = sml.e - big.e;  // <= 0
  ScaledReal r{big.m + (shift < -745.0 ? 0.0 : sml.m * std::exp(shift)), big.e};
  r.normalize();
  return r;
}

ScaledReal ScaledReal::operator-(const ScaledReal& o) const {
  return *this + ScaledReal{-o.m, o.e};
}

namespace {

struct Basis {
  ScaledReal phi, chi, dphi, dchi;  // r i_l, r k_l and radial derivatives
};

Basis basis_at(int ell, double kappa, double r) {
  double x = kappa * r;
  double is = sph_i_scaled(ell, x);
  double ks = sph_k_scaled(ell, x);
  double ips = sph_i_prime_scaled(ell, x);
  double kps = sph_k_prime_scaled(ell, x);
  Basis b;
  b.phi = ScaledReal::from(r * is, x);
  b.chi = ScaledReal::from(r * ks, -x);
  b.dphi = ScaledReal::from(is + x * ips, x);
  b.dchi = ScaledReal::from(ks + x * kps, -x);
  return b;
}

}  // namespace

RegionCoefficients propagate(const ShellConfig& cfg, int ell, double kappa) {
  validate_config(cfg);
  if (!(kappa > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "kappa must be positive");
  }
  RegionCoefficients rc;
  rc.ell = ell;
  rc.kappa = kappa;
  ScaledReal a = ScaledReal::from(1.0);
  ScaledReal b = ScaledReal::from(0.0);
  rc.a.push_back(a);
  rc.b.push_back(b);
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    double rj = cfg.radii[j];
    Basis bs = basis_at(ell, kappa, rj);
    // With Wronskian phi chi' - phi' chi = -1/kappa, continuity plus the
    // jump u'(+) - u'(-) = alpha u give exactly:
    //   a+ = a + kappa alpha u chi,  b+ = b - kappa alpha u phi.
    ScaledReal u = a * bs.phi + b * bs.chi;
    double f = kappa * cfg.alphas[j];
    a = a + u * bs.chi * f;
    b = b - u * bs.phi * f;
    rc.a.push_back(a);
    rc.b.push_back(b);
  }
  return rc;
}

double mismatch(const ShellConfig& cfg, int ell, double kappa) {
  RegionCoefficients rc = propagate(cfg, ell, kappa);
  const ScaledReal& a = rc.a.back();
  const ScaledReal& b = rc.b.back();
  if (a.m == 0.0) return 0.0;
  double la = a.log_abs();
  double lb = b.log_abs();
  double norm = std::max(la, lb);
  double v = std::exp(la - norm);
  return a.m < 0.0 ? -v : v;
}

double mismatch_swave(const ShellConfig& cfg, double kappa) {
  validate_config(cfg);
  // u = p e^{kr} + q e^{-kr}; interior sinh(kr) means (p, q) = (1/2, -1/2).
  double p = 0.5, q = -0.5;
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    double x = kappa * cfg.radii[j];
    double u = p * std::exp(x) + q * std::exp(-x);
    double t = cfg.alphas[j] * u / (2.0 * kappa);
    p += t * std::exp(-x);
    q -= t * std::exp(x);
    double s = std::max(std::abs(p), std::abs(q));
    if (s > 0.0) {
      p /= s;
      q /= s;
    }
  }
  return p / std::max(std::abs(p), std::abs(q));
}

std::vector<RadialSample> eigenfunction_samples(const ShellConfig& cfg, int ell,
                                                double kappa_root,
                                                const std::vector<double>& r_grid) {
  double mis = mismatch(cfg, ell, kappa_root);
  if (std::abs(mis) > 1e-6) {
    throw Error(ErrorCode::NotARoot,
                "mismatch " + std::to_string(mis) + " exceeds 1e-6");
  }
  RegionCoefficients rc = propagate(cfg, ell, kappa_root);
  // In the exterior the growing coefficient is pure noise at a root;
  // drop it so the tail is the clean decaying branch.
  rc.a.back() = ScaledReal::from(0.0);

  std::vector<ScaledReal> u(r_grid.size()), du(r_grid.size());
  double lmax = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    double r = r_grid[i];
    if (!(r > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "r grid must be positive");
    }
    std::size_t region = 0;
    while (region < cfg.size() && r > cfg.radii[region]) ++region;
    Basis bs = basis_at(ell, kappa_root, r);
    u[i] = rc.a[region] * bs.phi + rc.b[region] * bs.chi;
    du[i] = rc.a[region] * bs.dphi + rc.b[region] * bs.dchi;
    lmax = std::max(lmax, u[i].log_abs());
  }
  std::vector<RadialSample> out(r_grid.size());
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    u[i].e -= lmax;
    du[i].e -= lmax;
    out[i] = RadialSample{r_grid[i], u[i].to_double(), du[i].to_double()};
  }
  return out;
}

}  // namespace ds
