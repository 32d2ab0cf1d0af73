#pragma once

#include "pht/antilinear.hpp"
#include "pht/spectral.hpp"

namespace pht {

/// Complex-symmetric two-level Hamiltonian
///   H = [[r + t cos φ − i s sin φ,  i s cos φ + t sin φ],
///        [i s cos φ + t sin φ,      r − t cos φ + i s sin φ]].
/// Its PT-symmetry (P = cos φ σ₃ + sin φ σ₁, T = ⋆) is exact iff |s| < |t|.
struct SymmetricFamilyParams {
  double r = 0.0;
  double s = 0.0;
  double t = 1.0;
  double phi = 0.0;

  [[nodiscard]] bool exact() const noexcept;
  /// arcsin(s/t) on the principal branch; meaningful only when exact().
  [[nodiscard]] double alpha() const;
};

/// Most general two-level H with exact PT-symmetry for T = ⋆: the symmetric
/// family plus a u σ₂ term. Exact iff |s| < √(t² + u²).
struct GeneralFamilyParams {
  double r = 0.0;
  double s = 0.0;
  double t = 1.0;
  double u = 0.0;
  double phi = 0.0;

  [[nodiscard]] bool exact() const noexcept;
  /// t′ = √(t² + u²)
  [[nodiscard]] double t_prime() const noexcept;
  /// β = atan2(u, t) mapped into [0, 2π).
  [[nodiscard]] double beta() const noexcept;
};

struct GeneralTFamilyParams {
  GeneralFamilyParams base;
  TimeReversalParams tparams;
};

Matrix symmetric_hamiltonian(const SymmetricFamilyParams& p);

/// Closed-form ψₙ, φₙ = nψₙ* with sign n, Eₙ = r + n t cos α. Columns are in
/// descending eigenvalue order: (+, −) for t > 0, (−, +) for t < 0. Throws
/// ExceptionalPoint when |s| >= |t|(1 − 1e-12).
BiorthonormalSystem symmetric_eigensystem(const SymmetricFamilyParams& p);

struct FamilyOperators {
  Matrix eta_plus;
  Matrix parity;
  Matrix charge;
  Matrix rho_plus;
  /// Equivalent Hermitian Hamiltonian h = ρ₊ H ρ₊⁻¹.
  Matrix hermitian_h;
};

/// η₊ = [[sec α, i tan α], [−i tan α, sec α]], 𝒫 = parity_from_angle(φ),
/// 𝒞 in closed form, ρ₊ = [[r₊, −i r₋], [i r₋, r₊]] with
/// r± = ½(√(sec α − tan α) ± √(sec α + tan α)), and
/// h = r I + t cos α 𝒫, which is r I + √(t² − s²) 𝒫 for t > 0.
FamilyOperators symmetric_operators(const SymmetricFamilyParams& p);

/// cos φ σ₃ + sin φ σ₁
Matrix parity_from_angle(double phi);

/// e^{−iθσᵢ/2} σⱼ e^{iθσᵢ/2}. Throws InvalidAxis unless i ≠ j, both in 1..3.
Matrix pauli_rotation(int i, double theta, int j);

/// Levi-Civita symbol ε_ijk on 1..3.
int levi_civita(int i, int j, int k) noexcept;

Matrix general_hamiltonian(const GeneralFamilyParams& p);

struct GeneralReduction {
  /// Symmetric-family H′ with t replaced by t′.
  Matrix h_prime;
  /// U₁ = e^{−iφσ₂/2} e^{iβσ₁/2} e^{iφσ₂/2}, with H = U₁ H′ U₁⁻¹.
  Matrix u1;
};

/// Throws DegenerateDirection when t = u = 0.
GeneralReduction reduce_general_to_symmetric(const GeneralFamilyParams& p);

struct HermitianEquivalence {
  /// h′ = r I + √(t′² − s²) 𝒫(φ)
  Matrix h_prime_hermitian;
  /// U₂ = U₁ ρ′₊⁻¹, with H = U₂ h′ U₂⁻¹.
  Matrix u2;
};

/// Throws BrokenSymmetryParams unless |s| < t′.
HermitianEquivalence hermitize_equivalence(const GeneralFamilyParams& p);

/// Closed-form operators for the general family, obtained from the symmetric
/// ones by the unitary U₁ (η₊ → U₁η₊′U₁†, and so on).
FamilyOperators general_operators(const GeneralFamilyParams& p);

struct GeneralTFamily {
  Matrix h;
  Matrix p;
  AntilinearOperator t;
  /// U with τ = U², T = U ⋆ U⁻¹.
  Matrix u;
  Matrix h_check;
  Matrix p_check;
};

/// H = U Ȟ U⁻¹, P = U P̌ U⁻¹, τ = U². Throws BrokenSymmetryParams when the
/// base family is not exact.
GeneralTFamily general_t_hamiltonian(const GeneralTFamilyParams& p);

/// general_operators conjugated by the time-reversal root U.
FamilyOperators general_t_operators(const GeneralTFamilyParams& p);

}  // namespace pht
