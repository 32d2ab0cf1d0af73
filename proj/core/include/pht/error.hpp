#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pht {

enum class ErrorCode {
  NonFinite,
  DimensionMismatch,
  NotSquare,
  NotHermitian,
  NotPositiveDefinite,
  NotDiagonalizable,
  ComplexSpectrum,
  SingularWeight,
  SingularParity,
  NotPseudoHermitian,
  NotPTSymmetric,
  NotComplexSymmetric,
  ExceptionalPoint,
  BrokenSymmetryParams,
  DegenerateDirection,
  InvalidAxis,
  InvalidParameter,
  OutOfRange,
  NoPositiveMetric,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above, so
/// callers (the CLI in particular) can branch on the kind of failure.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace pht
