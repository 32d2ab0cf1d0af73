#pragma once

#include <cstdint>
#include <variant>

#include "pht/spectral.hpp"

namespace pht {

/// Positive-definite metric η₊ together with its positive square root ρ₊ and
/// the inverse root. Immutable once built; every instance satisfies
/// η₊ = η₊† > 0, ρ₊² = η₊ and ρ₊ρ₊⁻¹ = I.
class MetricOperator {
public:
  /// Throws NotHermitian or NotPositiveDefinite.
  static MetricOperator from_eta(const Matrix& eta);

  [[nodiscard]] const Matrix& eta_plus() const noexcept { return eta_; }
  [[nodiscard]] const Matrix& rho_plus() const noexcept { return rho_; }
  [[nodiscard]] const Matrix& rho_plus_inv() const noexcept { return rho_inv_; }
  [[nodiscard]] Eigen::Index dim() const noexcept { return eta_.rows(); }

private:
  MetricOperator(Matrix eta, Matrix rho, Matrix rho_inv)
      : eta_(std::move(eta)), rho_(std::move(rho)), rho_inv_(std::move(rho_inv)) {}

  Matrix eta_;
  Matrix rho_;
  Matrix rho_inv_;
};

struct Euclidean {};

/// Indefinite weight such as a parity operator: Hermitian and invertible.
class PseudoEta {
public:
  explicit PseudoEta(Matrix weight);
  [[nodiscard]] const Matrix& weight() const noexcept { return weight_; }

private:
  Matrix weight_;
};

struct MetricEta {
  MetricOperator metric;
};

using InnerProductKind = std::variant<Euclidean, PseudoEta, MetricEta>;

/// η₊ = Σₙ φₙφₙ†, with ρ₊ from its spectral square root. The result depends
/// on how B was normalized; it is canonical only relative to that choice.
MetricOperator build_eta_plus(const BiorthonormalSystem& b);

/// 𝒫 = Σₙ sₙ φₙφₙ† with the signs stored in B.
Matrix build_generalized_parity(const BiorthonormalSystem& b);

/// 𝒞 = Σₙ sₙ ψₙφₙ†. Commutes with H and equals η₊⁻¹𝒫.
Matrix build_charge_conjugation(const BiorthonormalSystem& b);

/// ||H† − η H η⁻¹||_F / ||H||_F. Throws SingularWeight when η is not
/// invertible to working precision.
double verify_pseudo_hermiticity(const Matrix& h, const Matrix& eta);

/// h = ρ₊ H ρ₊⁻¹. Throws NotPseudoHermitian when H is not η₊-pseudo-Hermitian
/// to `max_residual`.
Matrix hermitize(const Matrix& h, const MetricOperator& m, double max_residual = 1e-8);

enum class MapDirection { ToTilde, FromTilde };

/// ToTilde: ρ₊⁻¹ O ρ₊.  FromTilde: ρ₊ O ρ₊⁻¹.
Matrix map_observable(const Matrix& o, const MetricOperator& m, MapDirection direction);

/// ψ†·W·φ with W = I, the pseudo weight, or η₊.
Complex inner_product(const Vector& psi, const Vector& phi, const InnerProductKind& kind);

/// Largest |⟨⟨ρ₊⁻¹ψ, ρ₊⁻¹φ⟩⟩ − ψ†φ| over `trials` random unit vector pairs.
double verify_rho_unitarity(const MetricOperator& m, int trials, std::uint64_t seed = 0x5eedULL);

}  // namespace pht
