#pragma once

#include <string_view>

#include "pht/spectral.hpp"

namespace pht {

/// Antilinear map T = τ∘⋆ stored by its linear part τ: T ψ = τ ψ*.
class AntilinearOperator {
public:
  explicit AntilinearOperator(Matrix tau);

  /// Plain complex conjugation, T = ⋆.
  static AntilinearOperator conjugation(Eigen::Index dim);

  [[nodiscard]] const Matrix& tau() const noexcept { return tau_; }
  [[nodiscard]] Eigen::Index dim() const noexcept { return tau_.rows(); }

private:
  Matrix tau_;
};

/// τ ψ*. Throws DimensionMismatch.
Vector apply_antilinear(const AntilinearOperator& t, const Vector& psi);

/// A·(τ⋆) = (Aτ)⋆
AntilinearOperator compose(const Matrix& a, const AntilinearOperator& t);
/// (τ₁⋆)·(τ₂⋆) = τ₁τ₂*, a linear operator.
Matrix compose(const AntilinearOperator& t1, const AntilinearOperator& t2);

struct InvolutionCheck {
  bool hermitian_involution = false;
  /// ||τ − τᵀ||_F
  double symmetry_residual = 0.0;
  /// ||τ†τ − I||_F
  double unitarity_residual = 0.0;
};

/// T is a Hermitian antilinear involution iff τ is symmetric and unitary
/// (then T² = ττ* = I). Tolerance 1e-10 on both residuals.
InvolutionCheck is_hermitian_antilinear_involution(const AntilinearOperator& t, double tol = 1e-10);

/// Angles of the general 2×2 Hermitian antilinear involution, each in [0, 2π).
struct TimeReversalParams {
  double gamma = 0.0;
  double xi = 0.0;
  double zeta = 0.0;
};

/// τ = e^{iγ}[cos ξ I + i sin ξ (cos ζ σ₁ + sin ζ σ₃)]
AntilinearOperator make_time_reversal(const TimeReversalParams& p);

/// U = e^{iγ/2} e^{iξ(cos ζ σ₁ + sin ζ σ₃)/2}; symmetric, unitary, U² = τ and
/// T = U ⋆ U⁻¹.
Matrix unitary_sqrt_of_tau(const TimeReversalParams& p);

/// ||H(Pτ) − (Pτ)H*||_F / ||H||_F, i.e. the commutator [H, PT] written on
/// linear parts. Throws SingularParity.
double check_pt_symmetry(const Matrix& h, const Matrix& p, const AntilinearOperator& t);

enum class ExactnessFailure { None, ComplexEigenvalues, NotDiagonalizable };

std::string_view to_string(ExactnessFailure f) noexcept;

struct ExactnessReport {
  bool exact = false;
  /// Columns satisfy PTψ = ψ and Hψ = Eψ when exact; empty otherwise.
  Matrix fixed_eigenvectors;
  /// Real eigenvalues (descending) when exact; empty otherwise.
  RealVector eigenvalues;
  ExactnessFailure failure_reason = ExactnessFailure::None;
  double pt_residual = 0.0;
  /// max ||PTψₙ − ψₙ|| over the returned vectors.
  double fixed_point_residual = 0.0;
};

struct ExactnessOptions {
  SpectralOptions spectral{};
  /// Largest check_pt_symmetry residual accepted as a symmetry.
  double pt_tolerance = 1e-8;
  double fixed_point_tolerance = 1e-9;
};

/// Decides exactness of the PT-symmetry from the spectrum and, when exact,
/// returns eigenvectors rephased to be PT-fixed. Degenerate clusters are
/// spanned by ψ + PTψ and i(ψ − PTψ) combinations. Throws NotPTSymmetric.
ExactnessReport check_exactness(const Matrix& h, const Matrix& p, const AntilinearOperator& t,
                                const ExactnessOptions& opts = {});

/// Biorthonormal system built from PT-fixed eigenvectors scaled to unit
/// PT-norm, |ψₙ†Pψₙ| = 1, with signs sₙ = sign(ψₙ†Pψₙ). When H is also
/// P-pseudo-Hermitian (H† = PHP⁻¹, e.g. complex-symmetric H with T = ⋆) this
/// is the normalization under which 𝒫 = Σ sₙφₙφₙ† reproduces P itself.
/// Throws NotPTSymmetric, ComplexSpectrum or NotDiagonalizable.
BiorthonormalSystem pt_biorthonormalize(const Matrix& h, const Matrix& p, const AntilinearOperator& t,
                                        const ExactnessOptions& opts = {});

}  // namespace pht
