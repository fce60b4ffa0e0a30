#include <cmath>

#include "doctest.h"
#include "eframe/errors.hpp"
#include "eframe/etransform.hpp"
#include "eframe/linalg.hpp"
#include "eframe/rng.hpp"
#include "oracles.hpp"

using namespace eframe;

namespace {

MatrixSpec example_one_matrix() {
  return MatrixSpec::dense_prefix_plus_diagonal_rule(
      DenseMatrix::from_real({{1, 1, 0}, {0, 1, 1}, {0, 0, 3}}), ScalarRule::power(1.0));
}

VectorSequence example_one_sequence() {
  const double third = 1.0 / 3.0;
  return VectorSequence::prefix_then_scaled_basis(
      {DenseVector::from_real({1, -1, third}), DenseVector::from_real({0, 1, -third}),
       DenseVector::from_real({0, 0, third})},
      ScalarRule::inverse_power(1.0));
}

const MatrixSpec kIdentity = MatrixSpec::diagonal(ScalarRule::constant(Complex{1, 0}));
const VectorSequence kOnb = VectorSequence::scaled_basis(ScalarRule::constant(Complex{1, 0}));

}  // namespace

TEST_CASE("the worked example transforms onto the standard basis") {
  const auto terms = e_transform(example_one_matrix(), example_one_sequence(), 8, 8).terms;
  for (std::size_t n = 0; n < 8; ++n)
    CHECK(max_abs(terms[n] - DenseVector::basis(n, 8)) <= 1e-15);
}

TEST_CASE("identity matrix leaves sequences unchanged") {
  Rng rng(31);
  std::vector<DenseVector> psis;
  for (int k = 0; k < 6; ++k) psis.push_back(rng.vector(6));
  const auto terms = e_transform_terms(DenseMatrix::identity(6), psis);
  for (std::size_t k = 0; k < 6; ++k) CHECK(max_abs(terms[k] - psis[k]) == 0.0);
}

TEST_CASE("diagonal decay cancels polynomial growth") {
  const auto terms = e_transform(MatrixSpec::diagonal(ScalarRule::inverse_power(2.0)),
                                 VectorSequence::scaled_basis(ScalarRule::power(2.0)), 5, 5)
                         .terms;
  for (std::size_t n = 0; n < 5; ++n)
    CHECK(max_abs(terms[n] - DenseVector::basis(n, 5)) <= 1e-15);
}

TEST_CASE("transform agrees with the direct-summation oracle") {
  Rng rng(32);
  const DenseMatrix e = rng.matrix(7, 7);
  std::vector<DenseVector> psis;
  for (int k = 0; k < 7; ++k) psis.push_back(rng.vector(5));
  const auto got = e_transform_terms(e, psis);
  const auto expected = oracles::e_transform_direct(e, psis);
  for (std::size_t k = 0; k < 7; ++k) CHECK(max_abs(got[k] - expected[k]) <= 1e-13);
}

TEST_CASE("transformed frame operator and bounds") {
  // The worked example lands on the basis, so S is the identity.
  const DenseMatrix s = e_frame_operator(example_one_matrix(), example_one_sequence(), 8, 8);
  CHECK(max_abs(s - DenseMatrix::identity(8)) <= 1e-14);
  const FrameBounds unit = e_frame_bounds(example_one_matrix(), example_one_sequence(), 8, 8);
  CHECK(unit.lower == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(unit.upper == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(max_abs(e_frame_operator(kIdentity, kOnb, 4, 4) - DenseMatrix::identity(4)) == 0.0);

  // diag(1/n^2) over {k e_k}: the transform is {e_n / n}.
  const DenseMatrix decayed = e_frame_operator(MatrixSpec::diagonal(ScalarRule::inverse_power(2.0)),
                                               VectorSequence::scaled_basis(ScalarRule::power(1.0)),
                                               4, 4);
  for (std::size_t n = 0; n < 4; ++n)
    CHECK(decayed(n, n).real() == doctest::Approx(std::pow(n + 1.0, -2.0)).epsilon(1e-13));
  const FrameBounds fb = e_frame_bounds(MatrixSpec::diagonal(ScalarRule::inverse_power(2.0)),
                                        VectorSequence::scaled_basis(ScalarRule::power(1.0)), 4, 4);
  CHECK(fb.lower == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
  CHECK(fb.upper == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("analysis and synthesis of the transformed system") {
  const DenseVector f = DenseVector::from_real({1, 2, 0, 0, 0, 0, 0, 0});
  const DenseVector coeff = e_analysis(example_one_matrix(), example_one_sequence(), f, 8);
  CHECK(max_abs(coeff - analysis(
                            e_transform(example_one_matrix(), example_one_sequence(), 8, 8).terms,
                            f)) == 0.0);
  const DenseVector back = e_synthesis(example_one_matrix(), example_one_sequence(), coeff, 8);
  CHECK(norm2(back - f) <= 1e-12);  // the transformed system is the basis
}

TEST_CASE("synthesis factorization") {
  Rng rng(33);

  {  // diagonal E: both sides are identical termwise
    const DenseMatrix e =
        materialize_matrix(MatrixSpec::diagonal(ScalarRule::inverse_power(1.0)), 6);
    std::vector<DenseVector> psis;
    for (int k = 0; k < 6; ++k) psis.push_back(rng.vector(4));
    CHECK(verify_synthesis_factorization(e, psis, rng.vector(6)) <= 1e-12);
  }
  {  // the worked example with c = delta_1: both sides are e_1
    const DenseMatrix e = materialize_matrix(example_one_matrix(), 6);
    const auto psis = materialize_sequence(example_one_sequence(), 6, 6);
    DenseVector delta(6);
    delta[0] = Complex{1, 0};
    CHECK(verify_synthesis_factorization(e, psis, delta) <= 1e-15);
    const DenseVector lhs = e_synthesis(example_one_matrix(), example_one_sequence(), delta, 6);
    CHECK(max_abs(lhs - DenseVector::basis(0, 6)) <= 1e-15);
  }
  for (int trial = 0; trial < 100; ++trial) {  // exact finite-dimensional identity
    Rng case_rng(derive_case_seed(0, "test-synth", trial));
    const DenseMatrix e = case_rng.matrix(12, 12);
    std::vector<DenseVector> psis;
    for (int k = 0; k < 12; ++k) psis.push_back(case_rng.vector(12));
    CHECK(verify_synthesis_factorization(e, psis, case_rng.vector(12)) <= 1e-9);
  }
}

TEST_CASE("analysis factorization") {
  Rng rng(34);

  {  // real diagonal E
    const DenseMatrix e = materialize_matrix(MatrixSpec::diagonal(ScalarRule::power(1.0)), 5);
    std::vector<DenseVector> psis;
    for (int k = 0; k < 5; ++k) psis.push_back(rng.vector(3));
    CHECK(verify_analysis_factorization(e, psis, rng.vector(3)) <= 1e-12);
  }
  {  // E = diag(i) on the basis: both routes give (-i, 0, ...)
    DenseMatrix e(3, 3);
    for (int k = 0; k < 3; ++k) e(k, k) = Complex{0, 1};
    std::vector<DenseVector> psis;
    for (int k = 0; k < 3; ++k) psis.push_back(DenseVector::basis(k, 3));
    const DenseVector f = DenseVector::basis(0, 3);
    const auto terms = e_transform_terms(e, psis);
    const DenseVector coeff = analysis(terms, f);
    CHECK(coeff[0] == Complex{0, -1});
    CHECK(verify_analysis_factorization(e, psis, f) <= 1e-15);
  }
  for (int trial = 0; trial < 100; ++trial) {
    Rng case_rng(derive_case_seed(0, "test-anal", trial));
    const DenseMatrix e = case_rng.matrix(12, 12);
    std::vector<DenseVector> psis;
    for (int k = 0; k < 12; ++k) psis.push_back(case_rng.vector(12));
    CHECK(verify_analysis_factorization(e, psis, case_rng.vector(12)) <= 1e-9);
  }
}

TEST_CASE("scaled sequence bounds") {
  TruncationConfig cfg;
  cfg.ambient_dim = cfg.seq_len = 6;

  {  // constant symbol 2 scales both bounds by exactly 4
    const ScalarSequence two{ScalarRule::constant(Complex{2, 0}), TailBehavior::semi_normalized};
    const MatrixSpec e = MatrixSpec::diagonal(ScalarRule::inverse_power(1.0));
    const FrameBounds base = e_frame_bounds(e, kOnb, 6, 6);
    const ScaledBoundsReport rep = scaled_sequence_bounds(e, kOnb, two, cfg);
    CHECK(rep.within);
    CHECK(rep.bounds.lower == doctest::Approx(4.0 * base.lower).epsilon(1e-12));
    CHECK(rep.bounds.upper == doctest::Approx(4.0 * base.upper).epsilon(1e-12));
  }
  {  // the identity symbol changes nothing
    const ScalarSequence one{ScalarRule::constant(Complex{1, 0}), TailBehavior::semi_normalized};
    const ScaledBoundsReport rep = scaled_sequence_bounds(example_one_matrix(),
                                                          example_one_sequence(), one, cfg);
    CHECK(rep.within);
    CHECK(rep.bounds.lower == doctest::Approx(rep.predicted_lo).epsilon(1e-12));
    CHECK(rep.bounds.upper == doctest::Approx(rep.predicted_hi).epsilon(1e-12));
  }
  {  // the worked example's symbol at c = 2
    cfg.ambient_dim = cfg.seq_len = 8;
    const ScalarSequence m{
        ScalarRule::prefix_then_rule({Complex{2, 0}, Complex{2, 0}, Complex{2, 0}},
                                     ScalarRule::inverse_power(1.0), 3),
        TailBehavior::decaying};
    const ScaledBoundsReport rep =
        scaled_sequence_bounds(example_one_matrix(), example_one_sequence(), m, cfg);
    // E Psi is the basis, so the scaled system has bounds (inf m^2, sup m^2).
    CHECK(rep.within);
    CHECK(rep.bounds.lower == doctest::Approx(1.0 / 25.0).epsilon(1e-10));
    CHECK(rep.bounds.upper == doctest::Approx(4.0).epsilon(1e-10));
  }
  {  // symbols with zeros are rejected
    const ScalarSequence zero{ScalarRule::constant(Complex{0, 0}), TailBehavior::finite_support};
    CHECK_THROWS_AS(scaled_sequence_bounds(kIdentity, kOnb, zero, cfg), PreconditionError);
  }
}

TEST_CASE("absolute convergence bound") {
  TruncationConfig cfg;
  cfg.ambient_dim = cfg.seq_len = 8;

  {  // zero coefficients give a zero partial sum
    const AbsConvergenceReport rep =
        absolute_convergence_bound(kIdentity, kOnb, DenseVector(8), cfg);
    CHECK(rep.partial == 0.0);
    CHECK(rep.within);
  }
  {  // diag(1/n^2) against the basis with c = delta_1
    DenseVector delta(8);
    delta[0] = Complex{1, 0};
    const AbsConvergenceReport rep = absolute_convergence_bound(
        MatrixSpec::diagonal(ScalarRule::inverse_power(2.0)), kOnb, delta, cfg);
    CHECK(rep.partial == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rep.within);
    // The third factor of the bound is sqrt of the HS partial sum.
    CHECK(rep.bound == doctest::Approx(std::sqrt(8.0) *
                                       std::sqrt(oracles::inverse_power_partial_sum(8, 2.0)))
                           .epsilon(1e-12));
  }
  for (int trial = 0; trial < 50; ++trial) {  // Cauchy-Schwarz chain
    Rng rng(derive_case_seed(1, "test-abs", trial));
    std::vector<DenseVector> psis;
    for (int k = 0; k < 8; ++k) psis.push_back(rng.vector(8));
    const AbsConvergenceReport rep = absolute_convergence_bound(
        MatrixSpec::dense(rng.hs_scaled_matrix(8)), VectorSequence::explicit_vectors(psis),
        rng.vector(8), cfg);
    CHECK(rep.within);
  }
}

TEST_CASE("riesz transform check") {
  CHECK(riesz_etransform_check(DenseMatrix::identity(3), kIdentity, 3) == 0.0);

  const DenseMatrix swap = DenseMatrix::from_real({{0, 1}, {1, 0}});
  CHECK(riesz_etransform_check(swap, example_one_matrix(), 4) <= 1e-10);

  Rng rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseMatrix u = rng.well_conditioned(5, 0.6);
    const MatrixSpec e = MatrixSpec::dense(rng.well_conditioned(5, 0.5));
    CHECK(riesz_etransform_check(u, e, 5) <= 1e-9);
  }

  CHECK_THROWS_AS(riesz_etransform_check(DenseMatrix::from_real({{1, 1}, {1, 1}}), kIdentity, 2),
                  SingularMatrixError);
}

TEST_CASE("transform is linear in the sequence") {
  Rng rng(36);
  const DenseMatrix e = rng.matrix(6, 6);
  std::vector<DenseVector> psis, phis;
  for (int k = 0; k < 6; ++k) {
    psis.push_back(rng.vector(4));
    phis.push_back(rng.vector(4));
  }
  const Complex alpha = rng.unit_box(), beta = rng.unit_box();
  std::vector<DenseVector> combo;
  for (int k = 0; k < 6; ++k) combo.push_back(alpha * psis[k] + beta * phis[k]);

  const auto lhs = e_transform_terms(e, combo);
  const auto t_psi = e_transform_terms(e, psis);
  const auto t_phi = e_transform_terms(e, phis);
  for (int k = 0; k < 6; ++k)
    CHECK(max_abs(lhs[k] - (alpha * t_psi[k] + beta * t_phi[k])) <= 1e-12);
}

TEST_CASE("transformed frame operator is Hermitian PSD") {
  Rng rng(37);
  const DenseMatrix e = rng.matrix(7, 7);
  std::vector<DenseVector> psis;
  for (int k = 0; k < 7; ++k) psis.push_back(rng.vector(5));
  const DenseMatrix s = frame_operator(e_transform_terms(e, psis));
  CHECK(max_abs(s - adjoint(s)) <= 1e-13);
  const auto eigs = hermitian_eigenvalues(s);
  CHECK(eigs.front() >= -1e-12 * eigs.back());
}
