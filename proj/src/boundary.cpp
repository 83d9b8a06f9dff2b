#include "deltashell/boundary.hpp"

#include <cmath>

#include "deltashell/specfun.hpp"

namespace ds {

double det_lu(std::vector<double> a, std::size_t n) {
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    }
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
      det = -det;
    }
    double p = a[col * n + col];
    if (p == 0.0) return 0.0;
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = a[r * n + col] / p;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
    }
  }
  return det;
}

ChannelMatrix m_matrix(const ShellConfig& cfg, int ell, double kappa) {
  validate_config(cfg);
  std::size_t n = cfg.size();
  ChannelMatrix m{ell, kappa, n, std::vector<double>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double v = green_factor(ell, kappa, cfg.radii[i], cfg.radii[j]).value;
      m.entries[i * n + j] = v;
      m.entries[j * n + i] = v;
    }
  }
  return m;
}

double secular_det(const ShellConfig& cfg, int ell, double kappa) {
  ChannelMatrix m = m_matrix(cfg, ell, kappa);
  std::size_t n = m.n;
  std::vector<double> k(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double theta = cfg.alphas[j] * cfg.radii[j] * cfg.radii[j];
      k[i * n + j] = (i == j ? 1.0 : 0.0) + m.at(i, j) * theta;
    }
  }
  return det_lu(std::move(k), n);
}

ChannelMatrix threshold_matrix(const ShellConfig& cfg, int ell) {
  validate_config(cfg);
  if (ell < 1) {
    throw Error(ErrorCode::SWaveThresholdForbidden,
                "E=0 is not an L2 eigenvalue in the s-wave channel");
  }
  std::size_t n = cfg.size();
  ChannelMatrix a{ell, std::nullopt, n, std::vector<double>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double rmin = std::min(cfg.radii[i], cfg.radii[j]);
      double rmax = std::max(cfg.radii[i], cfg.radii[j]);
      double v = cfg.alphas[j] / (2 * ell + 1) *
                 std::pow(rmin, ell + 1) / std::pow(rmax, ell);
      a.entries[i * n + j] = (i == j ? 1.0 : 0.0) + v;
    }
  }
  return a;
}

double threshold_det(const ShellConfig& cfg, int ell) {
  ChannelMatrix a = threshold_matrix(cfg, ell);
  return det_lu(std::move(a.entries), a.n);
}

// One-sided Jacobi SVD; N <= 16 so no care for speed is needed.
int kernel_dimension(const ChannelMatrix& m, double tol) {
  std::size_t n = m.n;
  std::vector<double> a = m.entries;  // columns become left-rotated
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double app = 0, aqq = 0, apq = 0;
        for (std::size_t i = 0; i < n; ++i) {
          app += a[i * n + p] * a[i * n + p];
          aqq += a[i * n + q] * a[i * n + q];
          apq += a[i * n + p] * a[i * n + q];
        }
        off += apq * apq;
        if (std::abs(apq) < 1e-300) continue;
        double tau = (aqq - app) / (2.0 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = c * t;
        for (std::size_t i = 0; i < n; ++i) {
          double vp = a[i * n + p], vq = a[i * n + q];
          a[i * n + p] = c * vp - s * vq;
          a[i * n + q] = s * vp + c * vq;
        }
      }
    }
    if (off < 1e-30) break;
  }
  int dim = 0;
  for (std::size_t j = 0; j < n; ++j) {
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += a[i * n + j] * a[i * n + j];
    if (std::sqrt(norm) < tol) ++dim;
  }
  return dim;
}

}  // namespace ds
