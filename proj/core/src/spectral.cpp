#include "pht/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "pht/error.hpp"

namespace pht {

namespace {

constexpr double kTiny = 1e-300;

// Relative tolerance for matching a non-real eigenvalue with its conjugate.
constexpr double kPairTol = 1e-8;

bool is_real_eigenvalue(Complex lambda, double rtol) {
  return std::abs(lambda.imag()) <= rtol * (1.0 + std::abs(lambda));
}

bool conjugate_closed(const Vector& evals, double rtol) {
  const auto n = evals.size();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (used[i] || is_real_eigenvalue(evals(i), rtol)) continue;
    const Complex target = std::conj(evals(i));
    Eigen::Index best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i || used[j]) continue;
      const double d = std::abs(evals(j) - target);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best < 0 || best_dist > kPairTol * (1.0 + std::abs(evals(i)))) return false;
    used[i] = true;
    used[best] = true;
  }
  return true;
}

// Index of the first entry whose modulus is within a hair of the maximum;
// keeps the phase convention stable under rounding.
Eigen::Index dominant_index(const Vector& v) {
  const double vmax = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= (1.0 - 1e-12) * vmax) return i;
  }
  return 0;
}

void fix_canonical_phase(Eigen::Ref<Vector> v) {
  const Complex pivot = v(dominant_index(v));
  if (std::abs(pivot) > 0.0) v *= std::conj(pivot) / std::abs(pivot);
}

std::vector<int> alternating_signs(Eigen::Index n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = (i % 2 == 0) ? 1 : -1;
  return s;
}

void require_real_diagonalizable(const SpectralData& sd) {
  switch (sd.classification) {
    case SpectrumClass::RealDiagonalizable:
      return;
    case SpectrumClass::NearDefective:
      throw Error(ErrorCode::NotDiagonalizable,
                  "eigenvector condition number " + std::to_string(sd.eigvec_condition) +
                      " exceeds the defectiveness limit");
    case SpectrumClass::ConjugatePairs:
    case SpectrumClass::ComplexUnpaired:
      throw Error(ErrorCode::ComplexSpectrum, "spectrum has non-real eigenvalues");
  }
}

}  // namespace

std::string_view to_string(SpectrumClass c) noexcept {
  switch (c) {
    case SpectrumClass::RealDiagonalizable: return "RealDiagonalizable";
    case SpectrumClass::ConjugatePairs: return "ConjugatePairs";
    case SpectrumClass::ComplexUnpaired: return "ComplexUnpaired";
    case SpectrumClass::NearDefective: return "NearDefective";
  }
  return "Unknown";
}

std::string_view to_string(Normalization n) noexcept {
  switch (n) {
    case Normalization::Canonical: return "canonical";
    case Normalization::Symmetric: return "symmetric";
    case Normalization::PTFixed: return "pt-fixed";
  }
  return "unknown";
}

bool all_finite(const Matrix& m) noexcept {
  return m.allFinite();
}

bool all_finite(const Vector& v) noexcept {
  return v.allFinite();
}

void require_square_finite(const Matrix& m, std::string_view what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSquare, std::string(what) + " must be a non-empty square matrix");
  }
  if (!m.allFinite()) {
    throw Error(ErrorCode::NonFinite, std::string(what) + " has non-finite entries");
  }
}

Matrix identity(Eigen::Index dim) {
  return Matrix::Identity(dim, dim);
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  return a * b - b * a;
}

double hermiticity_residual(const Matrix& m) {
  return (m - m.adjoint()).norm() / std::max(m.norm(), kTiny);
}

double condition_number(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smin;
}

double biorthogonality_residual(const BiorthonormalSystem& b) {
  const Matrix g = b.phi.adjoint() * b.psi;
  return (g - identity(b.dim())).cwiseAbs().maxCoeff();
}

double completeness_residual(const BiorthonormalSystem& b) {
  const Matrix sum = b.psi * b.phi.adjoint();
  return (sum - identity(b.dim())).cwiseAbs().maxCoeff();
}

std::vector<std::pair<Eigen::Index, Eigen::Index>> eigenvalue_clusters(const RealVector& sorted_desc,
                                                                        double gap) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  const auto n = sorted_desc.size();
  Eigen::Index begin = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i == n || sorted_desc(i - 1) - sorted_desc(i) > gap) {
      out.emplace_back(begin, i);
      begin = i;
    }
  }
  return out;
}

SpectralData eigendecompose(const Matrix& h, const SpectralOptions& opts) {
  require_square_finite(h, "H");
  const auto n = h.rows();

  Eigen::ComplexEigenSolver<Matrix> solver(h, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NotDiagonalizable, "eigensolver failed to converge");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  const Vector& raw = solver.eigenvalues();
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (raw(a).real() != raw(b).real()) return raw(a).real() > raw(b).real();
    return raw(a).imag() > raw(b).imag();
  });

  SpectralData sd;
  sd.eigenvalues.resize(n);
  sd.right_eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    sd.eigenvalues(k) = raw(order[k]);
    sd.right_eigenvectors.col(k) = solver.eigenvectors().col(order[k]).normalized();
  }
  sd.eigvec_condition = condition_number(sd.right_eigenvectors);

  if (!(sd.eigvec_condition <= opts.condition_limit)) {
    sd.classification = SpectrumClass::NearDefective;
  } else if (std::all_of(sd.eigenvalues.begin(), sd.eigenvalues.end(),
                         [&](Complex z) { return is_real_eigenvalue(z, opts.reality_rtol); })) {
    sd.classification = SpectrumClass::RealDiagonalizable;
  } else if (conjugate_closed(sd.eigenvalues, opts.reality_rtol)) {
    sd.classification = SpectrumClass::ConjugatePairs;
  } else {
    sd.classification = SpectrumClass::ComplexUnpaired;
  }
  return sd;
}

BiorthonormalSystem biorthonormal_from_eigenvectors(Matrix psi, RealVector eigenvalues,
                                                    std::vector<int> signs, Normalization normalization) {
  const auto n = psi.cols();
  if (psi.rows() != n || eigenvalues.size() != n || static_cast<Eigen::Index>(signs.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "eigenvector matrix, eigenvalues and signs disagree in size");
  }
  Eigen::FullPivLU<Matrix> lu(psi);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::NotDiagonalizable, "eigenvectors are linearly dependent");
  }
  Matrix phi = lu.inverse().adjoint();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex c = phi.col(k).dot(psi.col(k));  // φ†ψ
    phi.col(k) /= std::conj(c);
  }
  return BiorthonormalSystem{std::move(psi), std::move(phi), std::move(eigenvalues), std::move(signs),
                             normalization};
}

BiorthonormalSystem biorthonormalize(const Matrix& h, const SpectralOptions& opts) {
  const SpectralData sd = eigendecompose(h, opts);
  require_real_diagonalizable(sd);

  const RealVector evals = sd.eigenvalues.real();
  Matrix psi = sd.right_eigenvectors;
  const double gap = opts.cluster_gap * std::max(h.norm(), kTiny);
  for (const auto& [begin, end] : eigenvalue_clusters(evals, gap)) {
    const auto k = end - begin;
    if (k < 2) continue;
    Eigen::HouseholderQR<Matrix> qr(psi.middleCols(begin, k));
    psi.middleCols(begin, k) = qr.householderQ() * Matrix::Identity(psi.rows(), k);
  }
  for (Eigen::Index k = 0; k < psi.cols(); ++k) fix_canonical_phase(psi.col(k));

  return biorthonormal_from_eigenvectors(std::move(psi), evals, alternating_signs(evals.size()),
                                         Normalization::Canonical);
}

BiorthonormalSystem biorthonormalize_symmetric(const Matrix& h, const SpectralOptions& opts) {
  require_square_finite(h, "H");
  if (!is_complex_symmetric(h)) {
    throw Error(ErrorCode::NotComplexSymmetric, "H differs from its transpose");
  }
  const SpectralData sd = eigendecompose(h, opts);
  require_real_diagonalizable(sd);

  const RealVector evals = sd.eigenvalues.real();
  Matrix psi = sd.right_eigenvectors;
  const double gap = opts.cluster_gap * std::max(h.norm(), kTiny);
  for (const auto& [begin, end] : eigenvalue_clusters(evals, gap)) {
    // Gram-Schmidt with respect to the bilinear form xᵀy.
    for (Eigen::Index i = begin; i < end; ++i) {
      for (Eigen::Index j = begin; j < i; ++j) {
        const Complex proj = (psi.col(j).transpose() * psi.col(i))(0);
        psi.col(i) -= proj * psi.col(j);
      }
      const Complex self = (psi.col(i).transpose() * psi.col(i))(0);
      if (std::abs(self) <= 1e-12 * psi.col(i).squaredNorm()) {
        throw Error(ErrorCode::NotDiagonalizable, "eigenvector is isotropic for the bilinear form");
      }
      psi.col(i) /= std::sqrt(self);
      const Complex pivot = psi(dominant_index(psi.col(i)), i);
      const bool flip = pivot.real() < 0.0 || (pivot.real() == 0.0 && pivot.imag() < 0.0);
      if (flip) psi.col(i) = -psi.col(i);
    }
  }

  return biorthonormal_from_eigenvectors(std::move(psi), evals, alternating_signs(evals.size()),
                                         Normalization::Symmetric);
}

bool is_complex_symmetric(const Matrix& h) {
  return h.rows() == h.cols() && (h - h.transpose()).norm() <= 1e-12 * std::max(h.norm(), kTiny);
}

BiorthonormalSystem biorthonormalize_auto(const Matrix& h, const SpectralOptions& opts) {
  require_square_finite(h, "H");
  return is_complex_symmetric(h) ? biorthonormalize_symmetric(h, opts) : biorthonormalize(h, opts);
}

SqrtPair hermitian_positive_sqrt_pair(const Matrix& a) {
  require_square_finite(a, "A");
  if (hermiticity_residual(a) > 1e-10) {
    throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian to 1e-10");
  }
  const Matrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  const RealVector& lambda = solver.eigenvalues();  // ascending
  const double scale = std::max(std::abs(lambda(lambda.size() - 1)), std::abs(lambda(0)));
  if (!(lambda(0) > 1e-13 * scale)) {
    throw Error(ErrorCode::NotPositiveDefinite,
                "smallest eigenvalue " + std::to_string(lambda(0)) + " is not positive");
  }
  const Matrix& v = solver.eigenvectors();
  const RealVector root = lambda.cwiseSqrt();
  SqrtPair out;
  out.sqrt = v * root.asDiagonal() * v.adjoint();
  out.inv_sqrt = v * root.cwiseInverse().asDiagonal() * v.adjoint();
  return out;
}

Matrix hermitian_positive_sqrt(const Matrix& a) {
  return hermitian_positive_sqrt_pair(a).sqrt;
}

Matrix matrix_exp(const Matrix& a) {
  require_square_finite(a, "A");
  Matrix out = a.exp();
  if (!out.allFinite()) {
    throw Error(ErrorCode::NonFinite, "matrix exponential overflowed");
  }
  return out;
}

}  // namespace pht
