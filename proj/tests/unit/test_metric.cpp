#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pht/error.hpp"
#include "pht/families.hpp"
#include "pht/metric.hpp"
#include "pht/pauli.hpp"
#include "support/oracles.hpp"

using namespace pht;
using namespace std::complex_literals;
using pht::testing::max_abs_diff;
using pht::testing::Rng;

namespace {

const double kAlpha = std::numbers::pi / 6.0;
const double kSec = 1.0 / std::cos(kAlpha);
const double kTan = std::tan(kAlpha);

Matrix m2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

const SymmetricFamilyParams kBase{0.0, 1.0, 2.0, 0.0};

}  // namespace

TEST_CASE("build_eta_plus: Hermitian input gives the Euclidean metric") {
  const auto b = biorthonormalize(diag2(1.0, 2.0));
  const auto m = build_eta_plus(b);
  CHECK(max_abs_diff(m.eta_plus(), Matrix::Identity(2, 2)) < 1e-15);
  CHECK(max_abs_diff(m.rho_plus(), Matrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("build_eta_plus: symmetric family closed form") {
  const auto m = build_eta_plus(symmetric_eigensystem(kBase));
  const Matrix expected = m2(kSec, 1i * kTan, -1i * kTan, kSec);
  CHECK(max_abs_diff(m.eta_plus(), expected) < 1e-12);
  CHECK(std::abs(m.eta_plus()(0, 0) - 1.1547005383792515) < 1e-12);
  CHECK(std::abs(m.eta_plus()(0, 1) - 0.5773502691896257i) < 1e-12);

  Eigen::SelfAdjointEigenSolver<Matrix> es(m.eta_plus());
  CHECK(std::abs(es.eigenvalues()(0) - 1.0 / std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(es.eigenvalues()(1) - std::sqrt(3.0)) < 1e-12);

  CHECK((m.rho_plus() * m.rho_plus() - m.eta_plus()).norm() < 1e-10 * m.eta_plus().norm());
  CHECK((m.rho_plus() * m.rho_plus_inv() - Matrix::Identity(2, 2)).norm() < 1e-10);
}

TEST_CASE("build_eta_plus: the symmetric-normalized generic pipeline reproduces the closed form") {
  const Matrix h = symmetric_hamiltonian(kBase);
  const auto m = build_eta_plus(biorthonormalize_symmetric(h));
  CHECK(max_abs_diff(m.eta_plus(), m2(kSec, 1i * kTan, -1i * kTan, kSec)) < 1e-12);
}

TEST_CASE("build_eta_plus: rejects a broken biorthonormal system") {
  auto b = biorthonormalize(diag2(1.0, 2.0));
  b.phi(0, 0) = 5.0;
  CHECK_THROWS_AS(build_eta_plus(b), Error);
}

TEST_CASE("build_generalized_parity: matches the parity angle") {
  for (double phi : {0.0, std::numbers::pi / 2.0, 0.7, 2.9, 5.5}) {
    const SymmetricFamilyParams p{0.3, 1.0, 2.0, phi};
    const Matrix parity = build_generalized_parity(symmetric_eigensystem(p));
    const Matrix expected = m2(std::cos(phi), std::sin(phi), std::sin(phi), -std::cos(phi));
    CHECK(max_abs_diff(parity, expected) < 1e-12);
    CHECK(max_abs_diff(parity * parity, Matrix::Identity(2, 2)) < 1e-10);
  }
  const Matrix p0 = build_generalized_parity(symmetric_eigensystem(kBase));
  CHECK(max_abs_diff(p0, pauli(3)) < 1e-12);
  const Matrix p90 = build_generalized_parity(symmetric_eigensystem({0.0, 1.0, 2.0, std::numbers::pi / 2.0}));
  CHECK(max_abs_diff(p90, pauli(1)) < 1e-12);
}

TEST_CASE("build_charge_conjugation: examples and identities") {
  CHECK(max_abs_diff(build_charge_conjugation(biorthonormalize(diag2(2.0, 1.0))), diag2(1.0, -1.0)) < 1e-15);

  const auto b = symmetric_eigensystem(kBase);
  const Matrix c = build_charge_conjugation(b);
  CHECK(max_abs_diff(c, m2(kSec, 1i * kTan, 1i * kTan, -kSec)) < 1e-12);
  CHECK(std::abs(c(0, 1) - 0.5773502691896257i) < 1e-12);

  for (double phi : {0.0, 1.1, 3.3, 4.0}) {
    const SymmetricFamilyParams p{-0.4, 0.8, 1.5, phi};
    const auto bs = symmetric_eigensystem(p);
    const Matrix h = symmetric_hamiltonian(p);
    const Matrix cc = build_charge_conjugation(bs);
    const auto m = build_eta_plus(bs);
    const Matrix parity = build_generalized_parity(bs);
    CHECK(max_abs_diff(cc, symmetric_operators(p).charge) < 1e-10);
    CHECK(max_abs_diff(cc * cc, Matrix::Identity(2, 2)) < 1e-10);
    CHECK(commutator(h, cc).norm() <= 1e-10 * h.norm());
    CHECK(max_abs_diff(cc, m.eta_plus().inverse() * parity) < 1e-10);
  }
}

TEST_CASE("verify_pseudo_hermiticity: examples") {
  const Matrix herm = m2(1.0, 2.0 - 1i, 2.0 + 1i, -3.0);
  CHECK(verify_pseudo_hermiticity(herm, Matrix::Identity(2, 2)) < 1e-16);

  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    SymmetricFamilyParams p{rng.uniform(-2, 2), rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(0, 6.28)};
    // P-pseudo-Hermiticity holds in both regimes.
    CHECK(verify_pseudo_hermiticity(symmetric_hamiltonian(p), parity_from_angle(p.phi)) < 1e-12);
    if (p.exact() && std::abs(p.s) < 0.99 * std::abs(p.t)) {
      CHECK(verify_pseudo_hermiticity(symmetric_hamiltonian(p), symmetric_operators(p).eta_plus) < 1e-10);
    }
  }
  CHECK_THROWS_WITH_AS(verify_pseudo_hermiticity(herm, diag2(1.0, 0.0)), doctest::Contains("SingularWeight"), Error);
}

TEST_CASE("hermitize: examples") {
  const Matrix herm = m2(1.0, 2.0 - 1i, 2.0 + 1i, -3.0);
  const auto id = MetricOperator::from_eta(Matrix::Identity(2, 2));
  CHECK(max_abs_diff(hermitize(herm, id), herm) < 1e-15);

  const Matrix h = symmetric_hamiltonian(kBase);
  const auto m = build_eta_plus(symmetric_eigensystem(kBase));
  const Matrix got = hermitize(h, m);
  // Oracle: the eigenvalues of H from its characteristic polynomial.
  const auto ev = testing::charpoly_eigenvalues(h);
  CHECK(max_abs_diff(got, diag2(ev[0].real(), ev[1].real())) < 1e-12);
  CHECK(max_abs_diff(got, diag2(std::sqrt(3.0), -std::sqrt(3.0))) < 1e-12);

  const SymmetricFamilyParams q{1.0, 0.6, 1.0, std::numbers::pi / 2.0};
  const auto mq = build_eta_plus(symmetric_eigensystem(q));
  const Matrix hq = hermitize(symmetric_hamiltonian(q), mq);
  CHECK(max_abs_diff(hq, m2(1.0, 0.8, 0.8, 1.0)) < 1e-12);
  // Brute-force similarity with the closed-form ρ₊.
  const auto ops = symmetric_operators(q);
  CHECK(max_abs_diff(hq, ops.rho_plus * symmetric_hamiltonian(q) * ops.rho_plus.inverse()) < 1e-12);

  CHECK_THROWS_WITH_AS(hermitize(h, id), doctest::Contains("NotPseudoHermitian"), Error);
}

TEST_CASE("hermitize: random quasi-Hermitian matrices are Hermitian and isospectral") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = rng.uniform_int(2, 16);
    const auto q = testing::random_quasi_hermitian(rng, n);
    const auto m = build_eta_plus(biorthonormalize(q.h));
    const Matrix hh = hermitize(q.h, m);
    CHECK(hermiticity_residual(hh) <= 1e-9);
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (hh + hh.adjoint()));
    std::vector<Complex> expected(q.lambda.data(), q.lambda.data() + n);
    std::vector<Complex> got(es.eigenvalues().data(), es.eigenvalues().data() + n);
    CHECK(testing::spectrum_distance(expected, got) < 1e-9);
  }
}

TEST_CASE("map_observable: examples and round trip") {
  const auto m = build_eta_plus(symmetric_eigensystem(kBase));
  CHECK(max_abs_diff(map_observable(Matrix::Identity(2, 2), m, MapDirection::ToTilde), Matrix::Identity(2, 2)) <
        1e-14);

  const Matrix h = symmetric_hamiltonian(kBase);
  CHECK(max_abs_diff(map_observable(hermitize(h, m), m, MapDirection::ToTilde), h) < 1e-9);

  // Direct product of the closed-form ρ₊ matrices.
  const double rp = 0.5 * (std::sqrt(kSec - kTan) + std::sqrt(kSec + kTan));
  const double rm = 0.5 * (std::sqrt(kSec - kTan) - std::sqrt(kSec + kTan));
  const Matrix rho = m2(rp, -1i * rm, 1i * rm, rp);
  const Matrix rho_inv = m2(rp, 1i * rm, -1i * rm, rp) / (rp * rp - rm * rm);
  const Matrix expected = rho_inv * pauli(3) * rho;
  const Matrix got = map_observable(pauli(3), m, MapDirection::ToTilde);
  CHECK(max_abs_diff(got, expected) < 1e-12);
  CHECK(std::abs(got(0, 0) - 1.1547005383792515) < 1e-12);
  CHECK(std::abs(got(1, 0) - 0.5773502691896256i) < 1e-12);

  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix o = rng.complex_matrix(2);
    const Matrix back = map_observable(map_observable(o, m, MapDirection::ToTilde), m, MapDirection::FromTilde);
    CHECK(max_abs_diff(back, o) < 1e-10);
  }
}

TEST_CASE("inner_product: the three kinds") {
  Vector e0(2), e1(2);
  e0 << 1.0, 0.0;
  e1 << 0.0, 1.0;
  CHECK(std::abs(inner_product(e0, e0, Euclidean{}) - 1.0) < 1e-15);
  CHECK(std::abs(inner_product(e1, e1, PseudoEta(pauli(3))) + 1.0) < 1e-15);

  const auto m = build_eta_plus(symmetric_eigensystem(kBase));
  CHECK(std::abs(inner_product(e0, e0, MetricEta{m}) - 1.1547005383792515) < 1e-12);

  Vector e3(3);
  e3 << 1.0, 0.0, 0.0;
  CHECK_THROWS_WITH_AS(inner_product(e0, e3, Euclidean{}), doctest::Contains("DimensionMismatch"), Error);
  CHECK_THROWS_WITH_AS(PseudoEta(m2(1.0, 1.0, 0.0, 1.0)), doctest::Contains("NotHermitian"), Error);
  CHECK_THROWS_WITH_AS(PseudoEta(diag2(1.0, 0.0)), doctest::Contains("SingularWeight"), Error);
}

TEST_CASE("inner_product: PT and CPT products are weighted Euclidean products") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const SymmetricFamilyParams p{rng.uniform(-2, 2), 0.0, rng.uniform(0.5, 3), rng.uniform(0, 6.28)};
    const SymmetricFamilyParams q{p.r, rng.uniform(-0.9, 0.9) * p.t, p.t, p.phi};
    const auto b = symmetric_eigensystem(q);
    const auto m = build_eta_plus(b);
    const Matrix parity = build_generalized_parity(b);
    const Vector psi = rng.complex_vector(2);
    const Vector phi = rng.complex_vector(2);
    // (ψ|φ) = [PTψ]ᵀφ with T = ⋆
    const Complex pt_product = (parity * psi.conjugate()).transpose() * phi;
    CHECK(std::abs(pt_product - inner_product(psi, phi, PseudoEta(parity))) < 1e-10);
    // ⟨ψ|φ⟩ = [CPTψ]ᵀφ
    const Matrix c = build_charge_conjugation(b);
    const Complex cpt_product = (c * parity * psi.conjugate()).transpose() * phi;
    CHECK(std::abs(cpt_product - inner_product(psi, phi, MetricEta{m})) < 1e-10);
  }
}

TEST_CASE("verify_rho_unitarity") {
  CHECK(verify_rho_unitarity(MetricOperator::from_eta(Matrix::Identity(2, 2)), 100) == 0.0);
  const auto m = build_eta_plus(symmetric_eigensystem(kBase));
  CHECK(verify_rho_unitarity(m, 100) <= 1e-10);

  Rng rng(4);
  const auto q = testing::random_quasi_hermitian(rng, 8);
  CHECK(verify_rho_unitarity(build_eta_plus(biorthonormalize(q.h)), 100) <= 1e-8);
}

TEST_CASE("MetricOperator::from_eta rejects indefinite weights") {
  CHECK_THROWS_WITH_AS(MetricOperator::from_eta(pauli(3)), doctest::Contains("NotPositiveDefinite"), Error);
  CHECK_THROWS_WITH_AS(MetricOperator::from_eta(m2(1.0, 1.0, 0.0, 1.0)), doctest::Contains("NotHermitian"), Error);
}
