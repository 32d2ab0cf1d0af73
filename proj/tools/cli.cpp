#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "pht/pht.hpp"

namespace pht::cli {

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFinite:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NotSquare:
    case ErrorCode::NotHermitian:
    case ErrorCode::SingularWeight:
    case ErrorCode::SingularParity:
    case ErrorCode::DegenerateDirection:
    case ErrorCode::InvalidAxis:
    case ErrorCode::InvalidParameter:
    case ErrorCode::OutOfRange:
      return kInputError;
    case ErrorCode::NotPositiveDefinite:
    case ErrorCode::NotDiagonalizable:
    case ErrorCode::ComplexSpectrum:
    case ErrorCode::NotPseudoHermitian:
    case ErrorCode::NotPTSymmetric:
    case ErrorCode::NotComplexSymmetric:
    case ErrorCode::ExceptionalPoint:
    case ErrorCode::BrokenSymmetryParams:
    case ErrorCode::NoPositiveMetric:
      return kSymmetryFailure;
  }
  return kInputError;
}

namespace {

/// Per-invocation settings from the global flags.
struct Settings {
  SpectralOptions spectral;
  /// Residual accepted for PT-symmetry and pseudo-Hermiticity checks.
  double atol = 1e-8;
  /// JSON indentation; -1 is compact, --pretty selects 2.
  int indent = -1;

  [[nodiscard]] ExactnessOptions exactness() const {
    ExactnessOptions o;
    o.spectral = spectral;
    o.pt_tolerance = atol;
    return o;
  }
};

/// The operator inputs shared by analyze, metric, hermitize and check-pt.
struct OperatorArgs {
  std::string input;
  std::string parity;
  std::string tau;
};

struct LoadedOperators {
  Matrix h;
  std::optional<Matrix> parity;
  std::optional<AntilinearOperator> tau;

  [[nodiscard]] Matrix parity_or_identity() const { return parity ? *parity : identity(h.rows()); }
  [[nodiscard]] AntilinearOperator tau_or_conjugation() const {
    return tau ? *tau : AntilinearOperator::conjugation(h.rows());
  }
};

LoadedOperators load(const OperatorArgs& args) {
  LoadedOperators ops;
  ops.h = matrix_from_json(read_json_file(args.input));
  if (!args.parity.empty()) ops.parity = matrix_from_json(read_json_file(args.parity));
  if (!args.tau.empty()) ops.tau = AntilinearOperator(matrix_from_json(read_json_file(args.tau)));
  return ops;
}

void add_operator_options(CLI::App* cmd, OperatorArgs& args, bool parity_required = false) {
  cmd->add_option("--input,-i", args.input, "Hamiltonian MatrixDocument (\"-\" for stdin)")->required();
  auto* p = cmd->add_option("--parity,-p", args.parity, "parity MatrixDocument");
  if (parity_required) p->required();
  cmd->add_option("--tau", args.tau, "linear part of the time reversal, T = tau * conjugation");
}

Json eigenvalues_to_json(const Vector& ev) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < ev.size(); ++i) out.push_back(complex_to_json(ev(i)));
  return out;
}

Json real_list(const RealVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

void emit(std::ostream& out, const Json& doc, int indent) {
  out << doc.dump(indent) << '\n';
}

/// Adds the name of the failing criterion to errors that report a broken
/// symmetry, so the message reads well on its own.
std::string describe(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ComplexSpectrum: return std::string("broken symmetry (complex eigenvalues): ") + e.what();
    case ErrorCode::NotDiagonalizable: return std::string("broken symmetry (near-defective): ") + e.what();
    default: return e.what();
  }
}

// ---------------------------------------------------------------- analyze --

int cmd_analyze(const OperatorArgs& args, bool require_exact, const Settings& tol, std::ostream& out,
                std::ostream& err) {
  const LoadedOperators ops = load(args);
  const Matrix p = ops.parity_or_identity();
  const AntilinearOperator t = ops.tau_or_conjugation();

  const SpectralData sd = eigendecompose(ops.h, tol.spectral);
  const double residual = check_pt_symmetry(ops.h, p, t);
  const bool pt_symmetric = residual <= tol.atol;

  bool exact = false;
  std::string failure = "NotPTSymmetric";
  if (pt_symmetric) {
    const ExactnessReport report = check_exactness(ops.h, p, t, tol.exactness());
    exact = report.exact;
    failure = std::string(to_string(report.failure_reason));
  }

  Json doc;
  doc["dim"] = ops.h.rows();
  doc["classification"] = std::string(to_string(sd.classification));
  doc["eigenvalues"] = eigenvalues_to_json(sd.eigenvalues);
  doc["eigvec_condition"] = sd.eigvec_condition;
  if (ops.parity) {  // with the default P = I the verdict is carried by "exact" alone
    doc["pt_symmetric"] = pt_symmetric;
    doc["pt_residual"] = residual;
  }
  doc["exact"] = exact;
  doc["failure_reason"] = failure;
  doc["metric_available"] = sd.classification == SpectrumClass::RealDiagonalizable;
  emit(out, doc, tol.indent);

  if (require_exact && !exact) {
    err << "error: PT-symmetry is not exact (" << failure << ")\n";
    return kSymmetryFailure;
  }
  return kSuccess;
}

// -------------------------------------------------------- metric/hermitize --

BiorthonormalSystem biorthonormal_for(const LoadedOperators& ops, const Settings& tol) {
  if (ops.parity) return pt_biorthonormalize(ops.h, *ops.parity, ops.tau_or_conjugation(), tol.exactness());
  return biorthonormalize_auto(ops.h, tol.spectral);
}

int cmd_metric(const OperatorArgs& args, const Settings& tol, std::ostream& out) {
  const LoadedOperators ops = load(args);
  const BiorthonormalSystem b = biorthonormal_for(ops, tol);
  const MetricOperator m = build_eta_plus(b);

  Json doc;
  doc["normalization"] = std::string(to_string(b.normalization));
  doc["eigenvalues"] = real_list(b.eigenvalues);
  doc["pseudo_hermiticity_residual"] = verify_pseudo_hermiticity(ops.h, m.eta_plus());
  doc["eta_plus"] = matrix_to_json(m.eta_plus());
  doc["parity"] = matrix_to_json(build_generalized_parity(b));
  doc["charge"] = matrix_to_json(build_charge_conjugation(b));
  doc["rho_plus"] = matrix_to_json(m.rho_plus());
  emit(out, doc, tol.indent);
  return kSuccess;
}

int cmd_hermitize(const OperatorArgs& args, const Settings& tol, std::ostream& out) {
  const LoadedOperators ops = load(args);
  const MetricOperator m = build_eta_plus(biorthonormal_for(ops, tol));
  emit(out, matrix_to_json(hermitize(ops.h, m, tol.atol)), tol.indent);
  return kSuccess;
}

// --------------------------------------------------------------- check-pt --

int cmd_check_pt(const OperatorArgs& args, const Settings& tol, std::ostream& out, std::ostream& err) {
  const LoadedOperators ops = load(args);
  const double residual = check_pt_symmetry(ops.h, ops.parity_or_identity(), ops.tau_or_conjugation());
  const bool symmetric = residual <= tol.atol;
  emit(out, Json{{"pt_symmetric", symmetric}, {"residual", residual}, {"tolerance", tol.atol}}, tol.indent);
  if (!symmetric) {
    err << "error: H does not commute with PT (residual " << residual << ")\n";
    return kSymmetryFailure;
  }
  return kSuccess;
}

// ----------------------------------------------------------------- family --

struct FamilyArgs {
  std::string kind;
  double r = 0.0;
  double s = 0.0;
  double t = 1.0;
  double u = 0.0;
  double phi = 0.0;
  double gamma = 0.0;
  double xi = 0.0;
  double zeta = 0.0;
  bool allow_broken = false;
};

void put_operators(Json& doc, const FamilyOperators& ops) {
  doc["eta_plus"] = matrix_to_json(ops.eta_plus);
  doc["parity"] = matrix_to_json(ops.parity);
  doc["charge"] = matrix_to_json(ops.charge);
  doc["rho_plus"] = matrix_to_json(ops.rho_plus);
  doc["h"] = matrix_to_json(ops.hermitian_h);
}

int cmd_family(const FamilyArgs& a, const Settings& tol, std::ostream& out, std::ostream& err) {
  const GeneralFamilyParams general{a.r, a.s, a.t, a.kind == "symmetric" ? 0.0 : a.u, a.phi};
  const bool exact = a.kind == "symmetric" ? SymmetricFamilyParams{a.r, a.s, a.t, a.phi}.exact() : general.exact();

  Json doc;
  doc["kind"] = a.kind;
  doc["exact"] = exact;
  doc["broken"] = !exact;

  if (!exact && !a.allow_broken) {
    err << "error: BrokenSymmetryParams: |s| must be strictly below "
        << (a.kind == "symmetric" ? "|t|" : "sqrt(t^2 + u^2)") << " (pass --allow-broken to emit H anyway)\n";
    return kSymmetryFailure;
  }

  if (a.kind == "symmetric") {
    const SymmetricFamilyParams p{a.r, a.s, a.t, a.phi};
    doc["H"] = matrix_to_json(symmetric_hamiltonian(p));
    if (exact) put_operators(doc, symmetric_operators(p));
  } else if (a.kind == "general") {
    doc["H"] = matrix_to_json(general_hamiltonian(general));
    if (exact) {
      put_operators(doc, general_operators(general));
      const GeneralReduction red = reduce_general_to_symmetric(general);
      const HermitianEquivalence eq = hermitize_equivalence(general);
      doc["h_prime"] = matrix_to_json(red.h_prime);
      doc["u1"] = matrix_to_json(red.u1);
      doc["h_prime_hermitian"] = matrix_to_json(eq.h_prime_hermitian);
      doc["u2"] = matrix_to_json(eq.u2);
    }
  } else {
    const TimeReversalParams tp{a.gamma, a.xi, a.zeta};
    const AntilinearOperator tau = make_time_reversal(tp);
    const Matrix u = unitary_sqrt_of_tau(tp);
    if (exact) {
      const GeneralTFamilyParams p{general, tp};
      const GeneralTFamily fam = general_t_hamiltonian(p);
      doc["H"] = matrix_to_json(fam.h);
      put_operators(doc, general_t_operators(p));
      doc["P"] = matrix_to_json(fam.p);
    } else {
      doc["H"] = matrix_to_json(u * general_hamiltonian(general) * u.adjoint());
      doc["P"] = matrix_to_json(u * parity_from_angle(a.phi) * u.adjoint());
    }
    doc["U"] = matrix_to_json(u);
    doc["tau"] = matrix_to_json(tau.tau());
  }
  emit(out, doc, tol.indent);
  return kSuccess;
}

// ----------------------------------------------------------------- evolve --

struct EvolveArgs {
  std::string input;
  std::string state;
  double t0 = 0.0;
  double t1 = 1.0;
  int steps = 100;
  std::string norm = "euclidean";
};

int cmd_evolve(const EvolveArgs& a, const Settings& tol, std::ostream& out) {
  EvolutionSpec spec;
  spec.hamiltonian = matrix_from_json(read_json_file(a.input));
  spec.initial_state = vector_from_json(read_json_file(a.state));
  spec.t0 = a.t0;
  spec.t1 = a.t1;
  spec.steps = a.steps;
  validate(spec);

  const NormTrajectory traj =
      norm_trajectory(spec, a.norm == "metric" ? NormKind::Metric : NormKind::Euclidean, tol.spectral);
  out << "t,norm\n";
  char line[96];
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    std::snprintf(line, sizeof line, "%.15g,%.15g\n", traj.times[k], traj.norms[k]);
    out << line;
  }
  return kSuccess;
}

std::optional<double> env_rtol() {
  const char* raw = std::getenv("PHT_RTOL");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0.0) || !std::isfinite(value)) {
    throw InputError(std::string("PHT_RTOL is not a positive number: ") + raw);
  }
  return value;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric, parity and charge operators for PT-symmetric matrices", "pht"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "pht 0.1.0");

  std::optional<double> rtol;
  double atol = 1e-8;
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.add_option("--rtol", rtol, "reality tolerance for eigenvalues (default 1e-9, or $PHT_RTOL)")
      ->check(CLI::PositiveNumber);
  app.add_option("--atol", atol, "residual tolerance for symmetry checks")->check(CLI::PositiveNumber)
      ->capture_default_str();

  OperatorArgs analyze_args;
  bool require_exact = false;
  auto* analyze = app.add_subcommand("analyze", "classify the spectrum and test PT-symmetry and its exactness");
  add_operator_options(analyze, analyze_args);
  analyze->add_flag("--require-exact", require_exact, "exit 3 unless the symmetry is exact");

  OperatorArgs metric_args;
  auto* metric = app.add_subcommand("metric", "emit eta_plus, the generalized parity, charge and rho_plus");
  add_operator_options(metric, metric_args);

  OperatorArgs hermitize_args;
  auto* herm = app.add_subcommand("hermitize", "emit the equivalent Hermitian matrix rho H rho^-1");
  add_operator_options(herm, hermitize_args);

  OperatorArgs check_args;
  auto* check = app.add_subcommand("check-pt", "test whether H commutes with PT");
  add_operator_options(check, check_args);

  FamilyArgs fam;
  auto* family = app.add_subcommand("family", "emit a closed-form two-level family and its operators");
  family->add_option("kind", fam.kind, "symmetric | general | general-t")
      ->required()
      ->check(CLI::IsMember({"symmetric", "general", "general-t"}));
  family->add_option("--r", fam.r, "energy offset (multiple of I)");
  family->add_option("--s", fam.s, "strength of the non-Hermitian part");
  family->add_option("--t", fam.t, "coupling; the symmetry is exact while s^2 < t^2 (+u^2)")->capture_default_str();
  family->add_option("--u", fam.u, "second coupling (general, general-t)");
  family->add_option("--phi", fam.phi, "parity angle in radians");
  family->add_option("--gamma", fam.gamma, "time-reversal angle gamma (general-t)");
  family->add_option("--xi", fam.xi, "time-reversal angle xi (general-t)");
  family->add_option("--zeta", fam.zeta, "time-reversal angle zeta (general-t)");
  family->add_flag("--allow-broken", fam.allow_broken, "emit H even when the symmetry is broken");

  EvolveArgs ev;
  auto* evolve_cmd = app.add_subcommand("evolve", "CSV trace of the state norm under exp(-iHt)");
  evolve_cmd->add_option("--input,-i", ev.input, "Hamiltonian MatrixDocument")->required();
  evolve_cmd->add_option("--state", ev.state, "initial state vector document")->required();
  evolve_cmd->add_option("--t0", ev.t0, "start time")->capture_default_str();
  evolve_cmd->add_option("--t1", ev.t1, "end time")->capture_default_str();
  evolve_cmd->add_option("--steps", ev.steps, "number of intervals; steps + 1 rows are written")->capture_default_str()->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--norm", ev.norm)
      ->capture_default_str()
      ->check(CLI::IsMember({"euclidean", "metric"}));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    Settings tol;
    tol.atol = atol;
    tol.indent = pretty ? 2 : -1;
    if (rtol) {
      tol.spectral.reality_rtol = *rtol;
    } else if (const auto from_env = env_rtol()) {
      tol.spectral.reality_rtol = *from_env;
    }

    if (*analyze) return cmd_analyze(analyze_args, require_exact, tol, out, err);
    if (*metric) return cmd_metric(metric_args, tol, out);
    if (*herm) return cmd_hermitize(hermitize_args, tol, out);
    if (*check) return cmd_check_pt(check_args, tol, out, err);
    if (*family) return cmd_family(fam, tol, out, err);
    if (*evolve_cmd) return cmd_evolve(ev, tol, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << describe(e) << '\n';
    return exit_code_for(e.code());
  }
  return kInputError;
}

}  // namespace pht::cli
