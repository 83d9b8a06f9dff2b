#ifndef DELTASHELL_CALIBRATE_HPP
#define DELTASHELL_CALIBRATE_HPP

#include <string>

#include "deltashell/model.hpp"

namespace ds {

/// hbar^2 / (2 m0 (1 nm)^2) in eV. All calibration outputs are
/// order-of-magnitude effective-interface estimates, never fitted values.
inline constexpr double kHbar2Over2m0nm2_eV = 0.0380998;

struct CalibrationInput {
  double delta_v_ev = 0.0;  // signed band offset
  double width_nm = 0.0;    // interface width w
  double mass_ratio = 1.0;  // m*/m0
  double l0_nm = 1.0;       // reference length L0
};

enum class Alignment { TypeI, TypeII, Other };

/// E0 = hbar^2 / (2 m* L0^2) in eV.
double reference_energy(double mass_ratio, double l0_nm);

/// alpha = (dV / E0) (w / L0); sign follows the band offset.
double coupling_from_interface(const CalibrationInput& in);

Alignment classify_alignment(double alpha1, double alpha2);

std::string alignment_name(Alignment a);

/// Appendix-style representative presets.
struct CalibrationPreset {
  std::string name;
  double mass_ratio;
  double l0_nm;
  ShellConfig config;  // radii already divided by L0
};

/// "type1-cdse-zns" or "type2-cdte-cdse"; throws InvalidArgument otherwise.
CalibrationPreset preset(const std::string& name);

}  // namespace ds

#endif
