#include "pht/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pht/error.hpp"

namespace pht {

void validate(const EvolutionSpec& spec) {
  require_square_finite(spec.hamiltonian, "H");
  if (spec.initial_state.size() != spec.hamiltonian.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "initial state and H differ in dimension");
  }
  if (!spec.initial_state.allFinite()) throw Error(ErrorCode::NonFinite, "initial state has non-finite entries");
  if (spec.initial_state.norm() == 0.0) throw Error(ErrorCode::InvalidParameter, "initial state is zero");
  if (!std::isfinite(spec.t0) || !std::isfinite(spec.t1) || !(spec.t1 > spec.t0)) {
    throw Error(ErrorCode::InvalidParameter, "need finite t0 < t1");
  }
  if (spec.steps < 1) throw Error(ErrorCode::InvalidParameter, "steps must be at least 1");
}

Vector evolve(const EvolutionSpec& spec, double t) {
  validate(spec);
  const double slack = 1e-12 * std::max(1.0, spec.t1 - spec.t0);
  if (!(t >= spec.t0 - slack && t <= spec.t1 + slack)) {
    throw Error(ErrorCode::OutOfRange, "t = " + std::to_string(t) + " lies outside [t0, t1]");
  }
  const Matrix generator = Complex(0.0, -(t - spec.t0)) * spec.hamiltonian;
  return matrix_exp(generator) * spec.initial_state;
}

NormTrajectory norm_trajectory(const EvolutionSpec& spec, const InnerProductKind& kind) {
  validate(spec);
  if (const auto* m = std::get_if<MetricEta>(&kind)) {
    const double residual = verify_pseudo_hermiticity(spec.hamiltonian, m->metric.eta_plus());
    if (residual > 1e-8) {
      throw Error(ErrorCode::NoPositiveMetric, "H is not Hermitian in the supplied metric");
    }
  }
  NormTrajectory out{{}, {}, kind};
  out.times.reserve(static_cast<std::size_t>(spec.steps) + 1);
  out.norms.reserve(static_cast<std::size_t>(spec.steps) + 1);
  const double dt = (spec.t1 - spec.t0) / spec.steps;
  for (int k = 0; k <= spec.steps; ++k) {
    const double t = (k == spec.steps) ? spec.t1 : spec.t0 + k * dt;
    const Vector psi = evolve(spec, t);
    const double value = inner_product(psi, psi, kind).real();
    out.times.push_back(t);
    out.norms.push_back(std::sqrt(std::abs(value)));
  }
  return out;
}

NormTrajectory norm_trajectory(const EvolutionSpec& spec, NormKind kind, const SpectralOptions& opts) {
  if (kind == NormKind::Euclidean) return norm_trajectory(spec, InnerProductKind{Euclidean{}});
  validate(spec);
  try {
    const BiorthonormalSystem b = biorthonormalize_auto(spec.hamiltonian, opts);
    return norm_trajectory(spec, InnerProductKind{MetricEta{build_eta_plus(b)}});
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ComplexSpectrum || e.code() == ErrorCode::NotDiagonalizable ||
        e.code() == ErrorCode::NotPositiveDefinite) {
      throw Error(ErrorCode::NoPositiveMetric, e.what());
    }
    throw;
  }
}

double fit_growth_rate(const NormTrajectory& traj, double tail_fraction) {
  const std::size_t n = traj.times.size();
  if (n < 2 || !(tail_fraction > 0.0) || tail_fraction > 1.0) {
    throw Error(ErrorCode::InvalidParameter, "need at least two samples and a tail fraction in (0, 1]");
  }
  const auto first = static_cast<std::size_t>(std::floor((1.0 - tail_fraction) * static_cast<double>(n - 1)));
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t m = 0;
  for (std::size_t i = first; i < n; ++i) {
    if (!(traj.norms[i] > 0.0)) continue;
    const double x = traj.times[i];
    const double y = std::log(traj.norms[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) throw Error(ErrorCode::InvalidParameter, "not enough positive samples to fit");
  const double md = static_cast<double>(m);
  return (md * sxy - sx * sy) / (md * sxx - sx * sx);
}

double relative_spread(const NormTrajectory& traj) {
  const auto [lo, hi] = std::minmax_element(traj.norms.begin(), traj.norms.end());
  if (lo == traj.norms.end() || *lo <= 0.0) return 0.0;
  return *hi / *lo - 1.0;
}

}  // namespace pht
