#include "pht/families.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "pht/error.hpp"
#include "pht/pauli.hpp"

namespace pht {

namespace {

using namespace std::complex_literals;

void require_finite(std::initializer_list<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, "family parameter is not finite");
  }
}

void require_symmetric_exact(const SymmetricFamilyParams& p) {
  require_finite({p.r, p.s, p.t, p.phi});
  if (p.t == 0.0 || std::abs(p.s) >= std::abs(p.t) * (1.0 - 1e-12)) {
    throw Error(ErrorCode::ExceptionalPoint, "|s| must be strictly below |t|");
  }
}

void require_general_exact(const GeneralFamilyParams& p) {
  require_finite({p.r, p.s, p.t, p.u, p.phi});
  if (!p.exact()) {
    throw Error(ErrorCode::BrokenSymmetryParams, "|s| must be strictly below sqrt(t^2 + u^2)");
  }
}

Matrix conjugate_by(const Matrix& u, const Matrix& m) {
  return u * m * u.adjoint();
}

FamilyOperators conjugate_by(const Matrix& u, const FamilyOperators& ops) {
  return FamilyOperators{conjugate_by(u, ops.eta_plus), conjugate_by(u, ops.parity), conjugate_by(u, ops.charge),
                         conjugate_by(u, ops.rho_plus), conjugate_by(u, ops.hermitian_h)};
}

// ρ₊ and its inverse for the symmetric family at angle α. det ρ₊ = 1.
struct RhoPair {
  Matrix rho;
  Matrix rho_inv;
};

RhoPair rho_closed_form(double alpha) {
  const double sec = 1.0 / std::cos(alpha);
  const double tan = std::tan(alpha);
  const double lo = std::sqrt(sec - tan);
  const double hi = std::sqrt(sec + tan);
  const double rp = 0.5 * (lo + hi);
  const double rm = 0.5 * (lo - hi);
  RhoPair out{Matrix(2, 2), Matrix(2, 2)};
  out.rho << rp, -1i * rm, 1i * rm, rp;
  const double det = rp * rp - rm * rm;
  out.rho_inv << rp / det, 1i * rm / det, -1i * rm / det, rp / det;
  return out;
}

}  // namespace

bool SymmetricFamilyParams::exact() const noexcept {
  return std::abs(s) < std::abs(t);
}

double SymmetricFamilyParams::alpha() const {
  if (t == 0.0) throw Error(ErrorCode::ExceptionalPoint, "alpha is undefined for t = 0");
  return std::asin(s / t);
}

bool GeneralFamilyParams::exact() const noexcept {
  return std::abs(s) < t_prime();
}

double GeneralFamilyParams::t_prime() const noexcept {
  return std::hypot(t, u);
}

double GeneralFamilyParams::beta() const noexcept {
  double b = std::atan2(u, t);
  if (b < 0.0) b += 2.0 * std::numbers::pi;
  return b;
}

Matrix symmetric_hamiltonian(const SymmetricFamilyParams& p) {
  require_finite({p.r, p.s, p.t, p.phi});
  const double c = std::cos(p.phi);
  const double sn = std::sin(p.phi);
  const Complex off = 1i * p.s * c + p.t * sn;
  Matrix h(2, 2);
  h << p.r + p.t * c - 1i * p.s * sn, off, off, p.r - p.t * c + 1i * p.s * sn;
  return h;
}

BiorthonormalSystem symmetric_eigensystem(const SymmetricFamilyParams& p) {
  require_symmetric_exact(p);
  const double alpha = p.alpha();
  const double root_cos = std::sqrt(std::cos(alpha));
  // Half-angle forms of aₙ = sin α / √(2(1 − n cos α) cos α) and
  // bₙ = (n cos α − 1) / √(2(1 − n cos α) cos α); they stay finite at α = 0,
  // where the n = + branch is taken as the α → 0⁺ limit.
  const double sgn = alpha < 0.0 ? -1.0 : 1.0;
  const double half_c = std::cos(0.5 * alpha);
  const double half_s = std::sin(0.5 * alpha);
  const double a[2] = {sgn * half_c / root_cos, half_s / root_cos};
  const double b[2] = {-sgn * half_s / root_cos, -half_c / root_cos};
  const int n[2] = {+1, -1};

  const double cp = std::cos(0.5 * p.phi);
  const double sp = std::sin(0.5 * p.phi);
  Matrix psi(2, 2);
  Matrix phi(2, 2);
  RealVector evals(2);
  for (int k = 0; k < 2; ++k) {
    psi(0, k) = a[k] * cp + 1i * b[k] * sp;
    psi(1, k) = a[k] * sp - 1i * b[k] * cp;
    phi.col(k) = static_cast<double>(n[k]) * psi.col(k).conjugate();
    evals(k) = p.r + n[k] * p.t * std::cos(alpha);
  }
  std::vector<int> signs{+1, -1};
  // For t < 0 the n = + branch is the lower level. Columns stay in descending
  // eigenvalue order and each sign travels with its vector, so 𝒫 is unchanged.
  if (p.t < 0.0) {
    psi.col(0).swap(psi.col(1));
    phi.col(0).swap(phi.col(1));
    std::swap(evals(0), evals(1));
    std::swap(signs[0], signs[1]);
  }
  return BiorthonormalSystem{std::move(psi), std::move(phi), std::move(evals), std::move(signs),
                             Normalization::Symmetric};
}

FamilyOperators symmetric_operators(const SymmetricFamilyParams& p) {
  require_symmetric_exact(p);
  const double alpha = p.alpha();
  const double sec = 1.0 / std::cos(alpha);
  const double tan = std::tan(alpha);
  const double c = std::cos(p.phi);
  const double sn = std::sin(p.phi);

  FamilyOperators ops;
  ops.eta_plus.resize(2, 2);
  ops.eta_plus << sec, 1i * tan, -1i * tan, sec;
  ops.parity = parity_from_angle(p.phi);
  ops.charge.resize(2, 2);
  const Complex off = sec * sn + 1i * tan * c;
  ops.charge << sec * c - 1i * tan * sn, off, off, -sec * c + 1i * tan * sn;
  ops.rho_plus = rho_closed_form(alpha).rho;
  ops.hermitian_h = p.r * identity(2) + (p.t * std::cos(alpha)) * ops.parity;
  return ops;
}

Matrix parity_from_angle(double phi) {
  require_finite({phi});
  return std::cos(phi) * pauli(3) + std::sin(phi) * pauli(1);
}

int levi_civita(int i, int j, int k) noexcept {
  if (i < 1 || i > 3 || j < 1 || j > 3 || k < 1 || k > 3) return 0;
  return (i - j) * (j - k) * (k - i) / 2;
}

Matrix pauli_rotation(int i, double theta, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) {
    throw Error(ErrorCode::InvalidAxis, "axes must be distinct and in 1..3");
  }
  require_finite({theta});
  return pauli_exp(-0.5 * theta, i) * pauli(j) * pauli_exp(0.5 * theta, i);
}

Matrix general_hamiltonian(const GeneralFamilyParams& p) {
  require_finite({p.r, p.s, p.t, p.u, p.phi});
  const double c = std::cos(p.phi);
  const double sn = std::sin(p.phi);
  Matrix h(2, 2);
  h << p.r + p.t * c - 1i * p.s * sn, p.t * sn + 1i * (p.s * c - p.u), p.t * sn + 1i * (p.s * c + p.u),
      p.r - p.t * c + 1i * p.s * sn;
  return h;
}

GeneralReduction reduce_general_to_symmetric(const GeneralFamilyParams& p) {
  require_finite({p.r, p.s, p.t, p.u, p.phi});
  const double tp = p.t_prime();
  if (tp == 0.0) throw Error(ErrorCode::DegenerateDirection, "t and u both vanish");
  GeneralReduction out;
  out.h_prime = symmetric_hamiltonian({p.r, p.s, tp, p.phi});
  // The orthogonal O = e^{−iφσ₂/2} carries σ₃ to the parity; U₁ = O e^{iβσ₁/2} O⁻¹.
  out.u1 = pauli_exp(-0.5 * p.phi, 2) * pauli_exp(0.5 * p.beta(), 1) * pauli_exp(0.5 * p.phi, 2);
  return out;
}

HermitianEquivalence hermitize_equivalence(const GeneralFamilyParams& p) {
  require_general_exact(p);
  const double tp = p.t_prime();
  const GeneralReduction red = reduce_general_to_symmetric(p);
  const double alpha = std::asin(p.s / tp);
  HermitianEquivalence out;
  out.h_prime_hermitian = p.r * identity(2) + std::sqrt(tp * tp - p.s * p.s) * parity_from_angle(p.phi);
  out.u2 = red.u1 * rho_closed_form(alpha).rho_inv;
  return out;
}

FamilyOperators general_operators(const GeneralFamilyParams& p) {
  require_general_exact(p);
  const GeneralReduction red = reduce_general_to_symmetric(p);
  return conjugate_by(red.u1, symmetric_operators({p.r, p.s, p.t_prime(), p.phi}));
}

GeneralTFamily general_t_hamiltonian(const GeneralTFamilyParams& p) {
  require_general_exact(p.base);
  const Matrix u = unitary_sqrt_of_tau(p.tparams);
  Matrix h_check = general_hamiltonian(p.base);
  Matrix p_check = parity_from_angle(p.base.phi);
  Matrix h = conjugate_by(u, h_check);
  Matrix parity = conjugate_by(u, p_check);
  return GeneralTFamily{std::move(h), std::move(parity), AntilinearOperator(u * u), u, std::move(h_check),
                        std::move(p_check)};
}

FamilyOperators general_t_operators(const GeneralTFamilyParams& p) {
  const Matrix u = unitary_sqrt_of_tau(p.tparams);
  return conjugate_by(u, general_operators(p.base));
}

}  // namespace pht
