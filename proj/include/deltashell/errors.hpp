#ifndef DELTASHELL_ERRORS_HPP
#define DELTASHELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ds {

enum class ErrorCode {
  NonIncreasingRadii,
  NonPositiveRadius,
  LengthMismatch,
  NonFiniteCoupling,
  WrongShellCount,
  Overflow,
  UnsupportedOrder,
  SWaveThresholdForbidden,
  NoInnerBoundState,
  DegenerateRoot,
  EllMaxReached,
  RootsNotResolved,
  SingularWronskian,
  NotARoot,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg, long index = -1)
      : std::runtime_error(msg), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  /// Offending index when the error refers to a config entry, else -1.
  long index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  long index_;
};

}  // namespace ds

#endif
