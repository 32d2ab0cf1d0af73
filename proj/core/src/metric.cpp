#include "pht/metric.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "pht/error.hpp"

namespace pht {

namespace {

void require_valid(const BiorthonormalSystem& b) {
  const auto n = b.psi.cols();
  if (n == 0 || b.psi.rows() != n || b.phi.rows() != n || b.phi.cols() != n || b.eigenvalues.size() != n ||
      static_cast<Eigen::Index>(b.signs.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "biorthonormal system has inconsistent shapes");
  }
  if (!b.psi.allFinite() || !b.phi.allFinite()) {
    throw Error(ErrorCode::NonFinite, "biorthonormal system has non-finite entries");
  }
  if (biorthogonality_residual(b) > 1e-8 || completeness_residual(b) > 1e-8) {
    throw Error(ErrorCode::InvalidParameter, "vectors are not biorthonormal");
  }
}

RealVector signs_of(const BiorthonormalSystem& b) {
  RealVector s(b.dim());
  for (Eigen::Index k = 0; k < b.dim(); ++k) s(k) = static_cast<double>(b.signs[static_cast<std::size_t>(k)]);
  return s;
}

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) throw Error(ErrorCode::DimensionMismatch, what);
}

}  // namespace

MetricOperator MetricOperator::from_eta(const Matrix& eta) {
  require_square_finite(eta, "eta");
  // Exact Hermitian symmetrization so η₊ is Hermitian to rounding.
  Matrix sym = 0.5 * (eta + eta.adjoint());
  if (hermiticity_residual(eta) > 1e-10) {
    throw Error(ErrorCode::NotHermitian, "metric is not Hermitian to 1e-10");
  }
  auto [rho, rho_inv] = hermitian_positive_sqrt_pair(sym);
  return MetricOperator(std::move(sym), std::move(rho), std::move(rho_inv));
}

PseudoEta::PseudoEta(Matrix weight) : weight_(std::move(weight)) {
  require_square_finite(weight_, "weight");
  if (hermiticity_residual(weight_) > 1e-10) {
    throw Error(ErrorCode::NotHermitian, "inner-product weight is not Hermitian");
  }
  if (!(condition_number(weight_) < 1e12)) {
    throw Error(ErrorCode::SingularWeight, "inner-product weight is singular");
  }
}

MetricOperator build_eta_plus(const BiorthonormalSystem& b) {
  require_valid(b);
  return MetricOperator::from_eta(b.phi * b.phi.adjoint());
}

Matrix build_generalized_parity(const BiorthonormalSystem& b) {
  require_valid(b);
  return b.phi * signs_of(b).asDiagonal() * b.phi.adjoint();
}

Matrix build_charge_conjugation(const BiorthonormalSystem& b) {
  require_valid(b);
  return b.psi * signs_of(b).asDiagonal() * b.phi.adjoint();
}

double verify_pseudo_hermiticity(const Matrix& h, const Matrix& eta) {
  require_square_finite(h, "H");
  require_square_finite(eta, "eta");
  require_same_dim(h.rows(), eta.rows(), "H and eta differ in dimension");
  Eigen::FullPivLU<Matrix> lu(eta);
  if (!(condition_number(eta) < 1e12)) {
    throw Error(ErrorCode::SingularWeight, "eta is not invertible to working precision");
  }
  const Matrix similar = eta * h * lu.inverse();
  const double scale = h.norm();
  const double diff = (h.adjoint() - similar).norm();
  return scale > 0.0 ? diff / scale : diff;
}

Matrix hermitize(const Matrix& h, const MetricOperator& m, double max_residual) {
  const double residual = verify_pseudo_hermiticity(h, m.eta_plus());
  if (residual > max_residual) {
    throw Error(ErrorCode::NotPseudoHermitian,
                "pseudo-Hermiticity residual " + std::to_string(residual) + " exceeds threshold");
  }
  return m.rho_plus() * h * m.rho_plus_inv();
}

Matrix map_observable(const Matrix& o, const MetricOperator& m, MapDirection direction) {
  require_square_finite(o, "O");
  require_same_dim(o.rows(), m.dim(), "observable and metric differ in dimension");
  if (direction == MapDirection::ToTilde) return m.rho_plus_inv() * o * m.rho_plus();
  return m.rho_plus() * o * m.rho_plus_inv();
}

Complex inner_product(const Vector& psi, const Vector& phi, const InnerProductKind& kind) {
  require_same_dim(psi.size(), phi.size(), "vectors differ in dimension");
  return std::visit(
      [&](const auto& k) -> Complex {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Euclidean>) {
          return psi.dot(phi);
        } else if constexpr (std::is_same_v<K, PseudoEta>) {
          require_same_dim(psi.size(), k.weight().rows(), "vector and weight differ in dimension");
          return psi.dot(k.weight() * phi);
        } else {
          require_same_dim(psi.size(), k.metric.dim(), "vector and metric differ in dimension");
          return psi.dot(k.metric.eta_plus() * phi);
        }
      },
      kind);
}

double verify_rho_unitarity(const MetricOperator& m, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const auto n = m.dim();
  auto random_unit = [&] {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(normal(rng), normal(rng));
    return Vector(v.normalized());
  };
  double worst = 0.0;
  for (int k = 0; k < trials; ++k) {
    const Vector psi = random_unit();
    const Vector phi = random_unit();
    const Complex weighted = (m.rho_plus_inv() * psi).dot(m.eta_plus() * (m.rho_plus_inv() * phi));
    worst = std::max(worst, std::abs(weighted - psi.dot(phi)));
  }
  return worst;
}

}  // namespace pht
