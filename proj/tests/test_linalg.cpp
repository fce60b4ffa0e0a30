#include <cmath>

#include "doctest.h"
#include "eframe/errors.hpp"
#include "eframe/linalg.hpp"
#include "eframe/rng.hpp"

using namespace eframe;

namespace {

const Complex i{0.0, 1.0};

// Matrices of the first worked example at the 4x4 truncation.
DenseMatrix example_matrix_4() {
  return DenseMatrix::from_real({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 3, 0}, {0, 0, 0, 4}});
}

DenseMatrix example_matrix_4_inverse() {
  const double third = 1.0 / 3.0;
  return DenseMatrix::from_real(
      {{1, -1, third, 0}, {0, 1, -third, 0}, {0, 0, third, 0}, {0, 0, 0, 0.25}});
}

}  // namespace

TEST_CASE("matvec basics") {
  const DenseVector x = DenseVector::from_real({1, 2, 3});
  CHECK(max_abs(matvec(DenseMatrix::identity(3), x) - x) == 0.0);

  const DenseMatrix swap = DenseMatrix::from_real({{0, 1}, {1, 0}});
  const DenseVector swapped = matvec(swap, DenseVector::from_real({1, 2}));
  CHECK(swapped[0] == Complex{2.0, 0.0});
  CHECK(swapped[1] == Complex{1.0, 0.0});

  const DenseMatrix d = DenseMatrix::from_real({{1, 0}, {0, 0.25}});
  const DenseVector scaled = matvec(d, DenseVector::from_real({4, 4}));
  CHECK(scaled[0] == Complex{4.0, 0.0});
  CHECK(scaled[1] == Complex{1.0, 0.0});

  CHECK_THROWS_AS(matvec(d, x), DimensionError);
}

TEST_CASE("matmul basics") {
  Rng rng(1);
  const DenseMatrix a = rng.matrix(3, 3);
  CHECK(max_abs(matmul(a, DenseMatrix::identity(3)) - a) == 0.0);

  // The worked example's matrix against its printed inverse.
  const DenseMatrix prod = matmul(example_matrix_4(), example_matrix_4_inverse());
  CHECK(max_abs(prod - DenseMatrix::identity(4)) <= 1e-15);

  const DenseMatrix swap = DenseMatrix::from_real({{0, 1}, {1, 0}});
  CHECK(max_abs(matmul(swap, swap) - DenseMatrix::identity(2)) == 0.0);

  CHECK_THROWS_AS(matmul(a, swap), DimensionError);
}

TEST_CASE("adjoint family") {
  const DenseMatrix a = DenseMatrix::from_rows({{Complex{1, 1}, Complex{2, 0}},
                                                {Complex{0, 0}, Complex{3, 0}}});
  const DenseMatrix h = adjoint(a);
  CHECK(h(0, 0) == Complex{1, -1});
  CHECK(h(0, 1) == Complex{0, 0});
  CHECK(h(1, 0) == Complex{2, 0});
  CHECK(h(1, 1) == Complex{3, 0});

  const DenseMatrix real = DenseMatrix::from_real({{1, 2}, {3, 4}});
  CHECK(max_abs(transpose(real) - adjoint(real)) == 0.0);

  const DenseMatrix di = DenseMatrix::from_rows({{i}});
  CHECK(conjugate(di)(0, 0) == -i);

  Rng rng(2);
  const DenseMatrix r = rng.matrix(4, 3);
  CHECK(max_abs(adjoint(adjoint(r)) - r) == 0.0);
  CHECK(max_abs(transpose(conjugate(r)) - adjoint(r)) == 0.0);
}

TEST_CASE("hermitian eigenvalues on closed forms") {
  const auto diag_eigs = hermitian_eigenvalues(DenseMatrix::from_real(
      {{3, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  REQUIRE(diag_eigs.size() == 3);
  CHECK(diag_eigs[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(diag_eigs[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(diag_eigs[2] == doctest::Approx(3.0).epsilon(1e-12));

  const auto pair = hermitian_eigenvalues(DenseMatrix::from_real({{2, 1}, {1, 2}}));
  CHECK(pair[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pair[1] == doctest::Approx(3.0).epsilon(1e-12));

  const auto ones = hermitian_eigenvalues(DenseMatrix::identity(5));
  for (double v : ones) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian eigensolver error paths") {
  CHECK_THROWS_AS(hermitian_eigenvalues(DenseMatrix(2, 3)), DimensionError);
  DenseMatrix skew = DenseMatrix::from_real({{0, 1}, {-1, 0}});
  CHECK_THROWS_AS(hermitian_eigenvalues(skew), PreconditionError);
}

TEST_CASE("eigenpair residual contract") {
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const DenseMatrix r = rng.matrix(16, 16);
    const DenseMatrix a = r + adjoint(r);
    const HermitianEigensystem eig = hermitian_eigensystem(a);
    const double norm = operator_norm(a);
    for (std::size_t k = 0; k < 16; ++k) {
      CHECK(norm2(matvec(a, eig.vectors.column(k)) -
                  Complex{eig.values[k], 0.0} * eig.vectors.column(k)) <= 1e-10 * norm);
      if (k > 0) CHECK(eig.values[k - 1] <= eig.values[k]);
    }
  }
}

TEST_CASE("operator norm") {
  CHECK(operator_norm(DenseMatrix::from_real({{1, 0, 0}, {0, 0.25, 0}, {0, 0, 1.0 / 9}})) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(operator_norm(DenseMatrix::from_real({{0, 2}, {0, 0}})) ==
        doctest::Approx(2.0).epsilon(1e-12));
  const DenseMatrix unitary = DenseMatrix::from_rows({{Complex{0, 0}, i}, {i, Complex{0, 0}}});
  CHECK(operator_norm(unitary) == doctest::Approx(1.0).epsilon(1e-12));

  // Largest |eigenvalue| of a Hermitian matrix equals its operator norm.
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const DenseMatrix r = rng.matrix(9, 9);
    const DenseMatrix a = r + adjoint(r);
    const auto eigs = hermitian_eigenvalues(a);
    const double extreme = std::max(std::abs(eigs.front()), std::abs(eigs.back()));
    CHECK(std::abs(extreme - operator_norm(a)) <= 1e-9 * extreme);
  }
}

TEST_CASE("gram matrices are PSD up to roundoff") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const DenseMatrix a = rng.matrix(8, 8);
    const auto eigs = hermitian_eigenvalues(matmul(adjoint(a), a));
    const double norm_sq = operator_norm(a) * operator_norm(a);
    for (double v : eigs) CHECK(v >= -1e-12 * norm_sq);
  }
}

TEST_CASE("invert on closed forms") {
  const DenseMatrix half = invert(DenseMatrix::from_real({{2}}));
  CHECK(half(0, 0) == Complex{0.5, 0.0});

  CHECK(max_abs(invert(example_matrix_4()) - example_matrix_4_inverse()) <= 1e-10);

  CHECK_THROWS_AS(invert(DenseMatrix::from_real({{1, 1}, {1, 1}})), SingularMatrixError);
  CHECK_THROWS_AS(invert(DenseMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(invert(DenseMatrix(3, 3)), SingularMatrixError);  // zero matrix
}

TEST_CASE("inverse residual scales with the condition number") {
  Rng rng(6);
  for (double spread_exp : {0.0, 2.0, 4.0, 6.0}) {
    const std::size_t n = 10;
    DenseMatrix a = rng.well_conditioned(n, 0.5);
    for (std::size_t k = 0; k < n; ++k) {
      const double scale = std::pow(10.0, -spread_exp * static_cast<double>(k) / (n - 1));
      for (std::size_t j = 0; j < n; ++j) a(k, j) *= scale;
    }
    const double cond = condition_number(a);
    REQUIRE(cond <= 2e6);
    CHECK(max_abs(matmul(a, invert(a)) - DenseMatrix::identity(n)) <= 1e-10 * cond);
  }
}

TEST_CASE("inner product conventions") {
  const DenseVector f = DenseVector::from_real({1, 0});
  const DenseVector g{Complex{0, 1}, Complex{0, 0}};
  // conjugate-linear in the second argument: <f, i g> = -i <f, g>
  CHECK(inner(f, g) == Complex{0, -1});
  CHECK(inner(g, f) == Complex{0, 1});
  const DenseMatrix o = outer(f, g);
  CHECK(o(0, 0) == Complex{0, -1});
}
