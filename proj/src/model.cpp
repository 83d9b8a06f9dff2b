#include "deltashell/model.hpp"

#include <cmath>
#include <string>

namespace ds {

const ShellConfig& validate_config(const ShellConfig& cfg) {
  if (cfg.radii.size() != cfg.alphas.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "radii and alphas must have equal length (" +
                    std::to_string(cfg.radii.size()) + " vs " +
                    std::to_string(cfg.alphas.size()) + ")");
  }
  if (cfg.radii.empty()) {
    throw Error(ErrorCode::LengthMismatch, "at least one shell is required");
  }
  for (std::size_t i = 0; i < cfg.radii.size(); ++i) {
    if (!(cfg.radii[i] > 0.0) || !std::isfinite(cfg.radii[i])) {
      throw Error(ErrorCode::NonPositiveRadius,
                  "radius " + std::to_string(i) + " must be positive",
                  static_cast<long>(i));
    }
    if (i > 0 && !(cfg.radii[i] > cfg.radii[i - 1])) {
      throw Error(ErrorCode::NonIncreasingRadii,
                  "radii must be strictly increasing at index " +
                      std::to_string(i),
                  static_cast<long>(i));
    }
    if (!std::isfinite(cfg.alphas[i])) {
      throw Error(ErrorCode::NonFiniteCoupling,
                  "coupling " + std::to_string(i) + " must be finite",
                  static_cast<long>(i));
    }
  }
  return cfg;
}

double separation(const ShellConfig& cfg) {
  if (cfg.size() != 2) {
    throw Error(ErrorCode::WrongShellCount,
                "separation is defined for exactly two shells");
  }
  return cfg.radii[1] - cfg.radii[0];
}

}  // namespace ds
