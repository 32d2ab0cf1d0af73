#pragma once

#include <array>
#include <cmath>

#include "pht/error.hpp"
#include "pht/spectral.hpp"

namespace pht {

/// σ₁, σ₂, σ₃ for axis = 1, 2, 3. Throws InvalidAxis otherwise.
inline Matrix pauli(int axis) {
  using namespace std::complex_literals;
  Matrix s(2, 2);
  switch (axis) {
    case 1: s << 0.0, 1.0, 1.0, 0.0; break;
    case 2: s << 0.0, -1i, 1i, 0.0; break;
    case 3: s << 1.0, 0.0, 0.0, -1.0; break;
    default: throw Error(ErrorCode::InvalidAxis, "Pauli axis must be 1, 2 or 3");
  }
  return s;
}

/// n·σ for a (not necessarily unit) real 3-vector.
inline Matrix pauli_dot(const std::array<double, 3>& n) {
  return n[0] * pauli(1) + n[1] * pauli(2) + n[2] * pauli(3);
}

/// e^{iρ n·σ} = cos ρ I + i sin ρ n·σ for unit n.
inline Matrix pauli_exp(double rho, const std::array<double, 3>& unit_n) {
  using namespace std::complex_literals;
  return std::cos(rho) * Matrix::Identity(2, 2) + (1i * std::sin(rho)) * pauli_dot(unit_n);
}

/// e^{iρ σ_axis}
inline Matrix pauli_exp(double rho, int axis) {
  std::array<double, 3> n{0.0, 0.0, 0.0};
  if (axis < 1 || axis > 3) throw Error(ErrorCode::InvalidAxis, "Pauli axis must be 1, 2 or 3");
  n[static_cast<std::size_t>(axis - 1)] = 1.0;
  return pauli_exp(rho, n);
}

}  // namespace pht
