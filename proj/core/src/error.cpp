#include "pht/error.hpp"

namespace pht {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorCode::ComplexSpectrum: return "ComplexSpectrum";
    case ErrorCode::SingularWeight: return "SingularWeight";
    case ErrorCode::SingularParity: return "SingularParity";
    case ErrorCode::NotPseudoHermitian: return "NotPseudoHermitian";
    case ErrorCode::NotPTSymmetric: return "NotPTSymmetric";
    case ErrorCode::NotComplexSymmetric: return "NotComplexSymmetric";
    case ErrorCode::ExceptionalPoint: return "ExceptionalPoint";
    case ErrorCode::BrokenSymmetryParams: return "BrokenSymmetryParams";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::InvalidAxis: return "InvalidAxis";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NoPositiveMetric: return "NoPositiveMetric";
  }
  return "Unknown";
}

}  // namespace pht
