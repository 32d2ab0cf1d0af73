#include "pht/antilinear.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "pht/error.hpp"
#include "pht/pauli.hpp"

namespace pht {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_angle(double a, const char* name) {
  if (!std::isfinite(a) || a < 0.0 || a >= kTwoPi) {
    throw Error(ErrorCode::InvalidParameter, std::string(name) + " must lie in [0, 2pi)");
  }
}

void require_params(const TimeReversalParams& p) {
  require_angle(p.gamma, "gamma");
  require_angle(p.xi, "xi");
  require_angle(p.zeta, "zeta");
}

// Rank test on unit-normalized columns.
bool independent(const Matrix& cols) {
  if (cols.cols() == 0) return true;
  Eigen::JacobiSVD<Matrix> svd(cols);
  const auto& sv = svd.singularValues();
  return sv(sv.size() - 1) > 1e-6;
}

}  // namespace

std::string_view to_string(ExactnessFailure f) noexcept {
  switch (f) {
    case ExactnessFailure::None: return "None";
    case ExactnessFailure::ComplexEigenvalues: return "ComplexEigenvalues";
    case ExactnessFailure::NotDiagonalizable: return "NotDiagonalizable";
  }
  return "Unknown";
}

AntilinearOperator::AntilinearOperator(Matrix tau) : tau_(std::move(tau)) {
  require_square_finite(tau_, "tau");
}

AntilinearOperator AntilinearOperator::conjugation(Eigen::Index dim) {
  return AntilinearOperator(identity(dim));
}

Vector apply_antilinear(const AntilinearOperator& t, const Vector& psi) {
  if (psi.size() != t.dim()) throw Error(ErrorCode::DimensionMismatch, "vector and operator differ in dimension");
  return t.tau() * psi.conjugate();
}

AntilinearOperator compose(const Matrix& a, const AntilinearOperator& t) {
  if (a.cols() != t.dim()) throw Error(ErrorCode::DimensionMismatch, "operators differ in dimension");
  return AntilinearOperator(a * t.tau());
}

Matrix compose(const AntilinearOperator& t1, const AntilinearOperator& t2) {
  if (t1.dim() != t2.dim()) throw Error(ErrorCode::DimensionMismatch, "operators differ in dimension");
  return t1.tau() * t2.tau().conjugate();
}

InvolutionCheck is_hermitian_antilinear_involution(const AntilinearOperator& t, double tol) {
  InvolutionCheck out;
  const Matrix& tau = t.tau();
  out.symmetry_residual = (tau - tau.transpose()).norm();
  out.unitarity_residual = (tau.adjoint() * tau - identity(t.dim())).norm();
  out.hermitian_involution = out.symmetry_residual <= tol && out.unitarity_residual <= tol;
  return out;
}

AntilinearOperator make_time_reversal(const TimeReversalParams& p) {
  using namespace std::complex_literals;
  require_params(p);
  const Matrix axis = std::cos(p.zeta) * pauli(1) + std::sin(p.zeta) * pauli(3);
  const Matrix tau =
      std::exp(1i * p.gamma) * (std::cos(p.xi) * Matrix::Identity(2, 2) + (1i * std::sin(p.xi)) * axis);
  return AntilinearOperator(tau);
}

Matrix unitary_sqrt_of_tau(const TimeReversalParams& p) {
  using namespace std::complex_literals;
  require_params(p);
  return std::exp(0.5i * p.gamma) * pauli_exp(0.5 * p.xi, {std::cos(p.zeta), 0.0, std::sin(p.zeta)});
}

double check_pt_symmetry(const Matrix& h, const Matrix& p, const AntilinearOperator& t) {
  require_square_finite(h, "H");
  require_square_finite(p, "P");
  if (h.rows() != p.rows() || h.rows() != t.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "H, P and T differ in dimension");
  }
  if (!(condition_number(p) < 1e12)) throw Error(ErrorCode::SingularParity, "P is not invertible");
  const Matrix pt = p * t.tau();
  const double diff = (h * pt - pt * h.conjugate()).norm();
  const double scale = h.norm();
  return scale > 0.0 ? diff / scale : diff;
}

ExactnessReport check_exactness(const Matrix& h, const Matrix& p, const AntilinearOperator& t,
                                const ExactnessOptions& opts) {
  ExactnessReport report;
  report.pt_residual = check_pt_symmetry(h, p, t);
  if (report.pt_residual > opts.pt_tolerance) {
    throw Error(ErrorCode::NotPTSymmetric,
                "[H, PT] residual " + std::to_string(report.pt_residual) + " exceeds tolerance");
  }

  const SpectralData sd = eigendecompose(h, opts.spectral);
  if (sd.classification == SpectrumClass::NearDefective) {
    report.failure_reason = ExactnessFailure::NotDiagonalizable;
    return report;
  }
  if (sd.classification != SpectrumClass::RealDiagonalizable) {
    report.failure_reason = ExactnessFailure::ComplexEigenvalues;
    return report;
  }

  const Matrix pt = p * t.tau();
  const auto apply_pt = [&](const Vector& v) -> Vector { return pt * v.conjugate(); };
  const RealVector evals = sd.eigenvalues.real();
  const auto n = h.rows();
  Matrix fixed(n, n);

  const double gap = opts.spectral.cluster_gap * std::max(h.norm(), 1e-300);
  for (const auto& [begin, end] : eigenvalue_clusters(evals, gap)) {
    const auto k = end - begin;
    if (k == 1) {
      Vector psi = sd.right_eigenvectors.col(begin);
      const Complex ratio = psi.dot(apply_pt(psi)) / psi.squaredNorm();
      psi *= std::polar(1.0, 0.5 * std::arg(ratio));
      fixed.col(begin) = psi;
      continue;
    }
    // PT maps the eigenspace onto itself; its fixed points span it over ℂ.
    Matrix chosen(n, 0);
    for (Eigen::Index j = begin; j < end && chosen.cols() < k; ++j) {
      const Vector v = sd.right_eigenvectors.col(j);
      const Vector w = apply_pt(v);
      for (const Vector& cand : {Vector(v + w), Vector(Complex(0.0, 1.0) * (v - w))}) {
        if (chosen.cols() == k || cand.norm() < 1e-8) continue;
        Matrix trial(n, chosen.cols() + 1);
        trial << chosen, cand.normalized();
        if (independent(trial)) chosen = std::move(trial);
      }
    }
    if (chosen.cols() != k) {
      throw Error(ErrorCode::NotPTSymmetric, "could not span a degenerate eigenspace with PT-fixed vectors");
    }
    fixed.middleCols(begin, k) = chosen;
  }

  for (Eigen::Index j = 0; j < n; ++j) {
    report.fixed_point_residual =
        std::max(report.fixed_point_residual, (apply_pt(fixed.col(j)) - fixed.col(j)).norm());
  }
  if (report.fixed_point_residual > opts.fixed_point_tolerance) {
    throw Error(ErrorCode::NotPTSymmetric,
                "PT-fixed residual " + std::to_string(report.fixed_point_residual) +
                    " exceeds tolerance; PT is not an involution on the eigenvectors");
  }
  report.exact = true;
  report.fixed_eigenvectors = std::move(fixed);
  report.eigenvalues = evals;
  return report;
}

BiorthonormalSystem pt_biorthonormalize(const Matrix& h, const Matrix& p, const AntilinearOperator& t,
                                        const ExactnessOptions& opts) {
  const ExactnessReport report = check_exactness(h, p, t, opts);
  if (!report.exact) {
    if (report.failure_reason == ExactnessFailure::NotDiagonalizable) {
      throw Error(ErrorCode::NotDiagonalizable, "H is not diagonalizable to tolerance");
    }
    throw Error(ErrorCode::ComplexSpectrum, "PT-symmetry is broken: complex eigenvalues");
  }

  Matrix psi = report.fixed_eigenvectors;
  const auto n = psi.cols();
  std::vector<int> signs(static_cast<std::size_t>(n), 1);
  const double gap = opts.spectral.cluster_gap * std::max(h.norm(), 1e-300);

  for (const auto& [begin, end] : eigenvalue_clusters(report.eigenvalues, gap)) {
    const auto k = end - begin;
    auto block = psi.middleCols(begin, k);
    const Matrix gram = block.adjoint() * p * block;
    Matrix mix;
    RealVector weights;
    if (gram.imag().norm() <= 1e-8 * std::max(gram.norm(), 1e-300)) {
      // Real combinations keep the vectors PT-fixed.
      const Eigen::MatrixXd g = 0.5 * (gram.real() + gram.real().transpose());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
      mix = es.eigenvectors().cast<Complex>();
      weights = es.eigenvalues();
    } else {
      const Matrix g = 0.5 * (gram + gram.adjoint());
      Eigen::SelfAdjointEigenSolver<Matrix> es(g);
      mix = es.eigenvectors();
      weights = es.eigenvalues();
    }
    const Matrix rotated = block * mix;
    block = rotated;
    for (Eigen::Index j = 0; j < k; ++j) {
      const double w = weights(j);
      if (std::abs(w) <= 1e-12 * block.col(j).squaredNorm()) {
        throw Error(ErrorCode::NotDiagonalizable, "eigenvector has vanishing PT-norm");
      }
      block.col(j) /= std::sqrt(std::abs(w));
      signs[static_cast<std::size_t>(begin + j)] = w > 0.0 ? 1 : -1;
    }
  }

  return biorthonormal_from_eigenvectors(std::move(psi), report.eigenvalues, std::move(signs),
                                         Normalization::PTFixed);
}

}  // namespace pht
