#include "deltashell/calibrate.hpp"

namespace ds {

double reference_energy(double mass_ratio, double l0_nm) {
  if (!(mass_ratio > 0.0) || !(l0_nm > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "mass ratio and L0 must be positive");
  }
  return kHbar2Over2m0nm2_eV / (mass_ratio * l0_nm * l0_nm);
}

double coupling_from_interface(const CalibrationInput& in) {
  if (!(in.width_nm > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "interface width must be positive");
  }
  double e0 = reference_energy(in.mass_ratio, in.l0_nm);
  return (in.delta_v_ev / e0) * (in.width_nm / in.l0_nm);
}

Alignment classify_alignment(double alpha1, double alpha2) {
  if (alpha1 < 0.0 && alpha2 > 0.0) return Alignment::TypeI;
  if (alpha1 > 0.0 && alpha2 < 0.0) return Alignment::TypeII;
  return Alignment::Other;
}

std::string alignment_name(Alignment a) {
  switch (a) {
    case Alignment::TypeI:
      return "TypeI";
    case Alignment::TypeII:
      return "TypeII";
    default:
      return "Other";
  }
}

CalibrationPreset preset(const std::string& name) {
  if (name == "type1-cdse-zns") {
    return CalibrationPreset{name, 0.13, 1.0,
                             ShellConfig{{2.5, 3.5}, {-2.5, 0.7}}};
  }
  if (name == "type2-cdte-cdse") {
    return CalibrationPreset{name, 0.11, 1.0,
                             ShellConfig{{2.5, 3.5}, {2.5, -0.8}}};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown preset: " + name);
}

}  // namespace ds
