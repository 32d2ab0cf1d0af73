#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace pht {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Thresholds used by the spectral routines. The defaults are the values the
/// rest of the library is tested against.
struct SpectralOptions {
  /// An eigenvalue counts as real when |Im λ| <= reality_rtol * (1 + |λ|).
  double reality_rtol = 1e-9;
  /// Eigenvector matrices with a larger 2-norm condition number are treated
  /// as defective (an exceptional point is nearby).
  double condition_limit = 1e8;
  /// Adjacent real eigenvalues closer than cluster_gap * ||H||_F form one
  /// degenerate cluster.
  double cluster_gap = 1e-8;
};

enum class SpectrumClass {
  RealDiagonalizable,
  ConjugatePairs,
  /// Non-real eigenvalues that do not pair up under conjugation; cannot arise
  /// from an antilinear symmetry.
  ComplexUnpaired,
  NearDefective,
};

std::string_view to_string(SpectrumClass c) noexcept;

struct SpectralData {
  /// Sorted by real part descending, ties by imaginary part descending.
  Vector eigenvalues;
  /// Unit-norm right eigenvectors, column n pairs with eigenvalues(n).
  Matrix right_eigenvectors;
  double eigvec_condition = 1.0;
  SpectrumClass classification = SpectrumClass::RealDiagonalizable;
};

/// How the eigenvectors of a biorthonormal system were scaled.
enum class Normalization {
  /// Unit-norm ψ with its largest-modulus entry real positive.
  Canonical,
  /// Complex-symmetric H: ψᵀψ = 1, so that φ = ψ* up to sign.
  Symmetric,
  /// PT-fixed ψ with |ψ†Pψ| = 1; signs carry the PT-norm signature.
  PTFixed,
};

std::string_view to_string(Normalization n) noexcept;

/// Eigenvectors ψ of H (columns of psi) and the dual eigenvectors φ of H†
/// (columns of phi) with φ†ψ = I. Columns are ordered by descending eigenvalue.
struct BiorthonormalSystem {
  Matrix psi;
  Matrix phi;
  RealVector eigenvalues;
  /// ±1 weights used to build the generalized parity and charge operators.
  std::vector<int> signs;
  Normalization normalization = Normalization::Canonical;

  [[nodiscard]] Eigen::Index dim() const noexcept { return psi.cols(); }
};

/// max |φₙ†ψₘ − δₙₘ|
double biorthogonality_residual(const BiorthonormalSystem& b);
/// max |Σₙ ψₙφₙ† − I|
double completeness_residual(const BiorthonormalSystem& b);

// Basic predicates and helpers shared by every module.

bool all_finite(const Matrix& m) noexcept;
bool all_finite(const Vector& v) noexcept;
/// Throws NotSquare / NonFinite; `what` names the argument in the message.
void require_square_finite(const Matrix& m, std::string_view what);
Matrix identity(Eigen::Index dim);
Matrix commutator(const Matrix& a, const Matrix& b);
/// ||M − M†||_F / max(||M||_F, 1e-300)
double hermiticity_residual(const Matrix& m);
/// 2-norm condition number from the singular values.
double condition_number(const Matrix& m);

/// Contiguous [begin, end) index ranges of eigenvalues (already sorted
/// descending) whose neighbouring gaps are <= gap.
std::vector<std::pair<Eigen::Index, Eigen::Index>> eigenvalue_clusters(const RealVector& sorted_desc,
                                                                        double gap);

SpectralData eigendecompose(const Matrix& h, const SpectralOptions& opts = {});

/// Biorthonormal system with the canonical phase convention. Eigenvectors of a
/// degenerate cluster are orthonormalized inside the cluster first.
BiorthonormalSystem biorthonormalize(const Matrix& h, const SpectralOptions& opts = {});

/// Biorthonormal system for a complex-symmetric H (H = Hᵀ) scaled so that
/// ψₙᵀψₙ = 1, which makes φₙ = ψₙ*. Signs alternate +,−,+,… in descending
/// eigenvalue order. For the two-level family this reproduces the textbook
/// normalization of the generalized parity and charge operators.
BiorthonormalSystem biorthonormalize_symmetric(const Matrix& h, const SpectralOptions& opts = {});

/// Symmetric normalization when H equals its transpose, canonical otherwise.
BiorthonormalSystem biorthonormalize_auto(const Matrix& h, const SpectralOptions& opts = {});

/// True when ||H − Hᵀ||_F <= 1e-12 ||H||_F.
bool is_complex_symmetric(const Matrix& h);

/// Builds φ as the dual basis of the given eigenvectors (columns of psi),
/// then rescales each φₙ so φₙ†ψₙ = 1 exactly.
BiorthonormalSystem biorthonormal_from_eigenvectors(Matrix psi, RealVector eigenvalues,
                                                    std::vector<int> signs, Normalization normalization);

/// Positive square root of a Hermitian positive-definite matrix, via its
/// spectral decomposition.
Matrix hermitian_positive_sqrt(const Matrix& a);

struct SqrtPair {
  Matrix sqrt;
  Matrix inv_sqrt;
};

/// Square root and inverse square root from a single eigendecomposition.
SqrtPair hermitian_positive_sqrt_pair(const Matrix& a);

/// exp(A) by scaling and squaring with a Padé approximant.
Matrix matrix_exp(const Matrix& a);

}  // namespace pht
