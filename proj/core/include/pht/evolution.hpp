#pragma once

#include <vector>

#include "pht/metric.hpp"
#include "pht/spectral.hpp"

namespace pht {

/// Time-independent Schrödinger problem i dψ/dt = Hψ (ħ = 1) sampled on
/// steps + 1 equally spaced times in [t0, t1].
struct EvolutionSpec {
  Matrix hamiltonian;
  Vector initial_state;
  double t0 = 0.0;
  double t1 = 1.0;
  int steps = 1;
};

/// Throws DimensionMismatch, NonFinite or InvalidParameter.
void validate(const EvolutionSpec& spec);

struct NormTrajectory {
  std::vector<double> times;
  /// √⟨ψ(t), ψ(t)⟩ in the chosen inner product. For an indefinite weight the
  /// square root of the modulus is stored.
  std::vector<double> norms;
  InnerProductKind kind;
};

/// ψ(t) = exp(−iH(t − t0)) ψ(t0). Throws OutOfRange for t outside [t0, t1].
Vector evolve(const EvolutionSpec& spec, double t);

/// Norms of ψ(t) on the sample grid. A MetricEta kind must be a metric for
/// which H is pseudo-Hermitian (residual <= 1e-8), otherwise NoPositiveMetric.
NormTrajectory norm_trajectory(const EvolutionSpec& spec, const InnerProductKind& kind);

enum class NormKind { Euclidean, Metric };

/// As above, building the metric from H itself (biorthonormalize_auto) when
/// NormKind::Metric is requested. Broken or defective H gives NoPositiveMetric.
NormTrajectory norm_trajectory(const EvolutionSpec& spec, NormKind kind, const SpectralOptions& opts = {});

/// Least-squares slope of log(norm) against time over the trailing
/// `tail_fraction` of the samples; the asymptotic growth exponent.
double fit_growth_rate(const NormTrajectory& traj, double tail_fraction = 0.6);

/// max/min − 1 over the trajectory; zero for a conserved norm.
double relative_spread(const NormTrajectory& traj);

}  // namespace pht
