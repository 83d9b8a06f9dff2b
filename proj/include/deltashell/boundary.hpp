#ifndef DELTASHELL_BOUNDARY_HPP
#define DELTASHELL_BOUNDARY_HPP

#include <optional>
#include <vector>

#include "deltashell/model.hpp"

namespace ds {

/// Per-channel N x N boundary matrix, row-major.
struct ChannelMatrix {
  int ell = 0;
  std::optional<double> kappa;  // absent for the zero-energy variant
  std::size_t n = 0;
  std::vector<double> entries;

  double at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

/// m_l(-kappa^2): entries are the single-layer Green factors
/// green_factor(l, kappa, R_i, R_j); symmetric, entrywise positive.
ChannelMatrix m_matrix(const ShellConfig& cfg, int ell, double kappa);

/// det(I + m_l(-kappa^2) diag(alpha_j R_j^2)) by partial-pivot LU.
/// Zeros are the channel-l bound state decay rates.
double secular_det(const ShellConfig& cfg, int ell, double kappa);

/// Zero-energy threshold matrix A_l, entries
/// delta_ij + alpha_j/(2l+1) * Rmin^{l+1}/Rmax^l. Requires l >= 1:
/// the s-wave has no zero-energy eigenstate.
ChannelMatrix threshold_matrix(const ShellConfig& cfg, int ell);

double threshold_det(const ShellConfig& cfg, int ell);

/// Number of singular values below tol (kernel dimension estimate).
int kernel_dimension(const ChannelMatrix& m, double tol = 1e-10);

/// Determinant of a small dense row-major matrix, partial-pivot LU.
double det_lu(std::vector<double> a, std::size_t n);

}  // namespace ds

#endif
