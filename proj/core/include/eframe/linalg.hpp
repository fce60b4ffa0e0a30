#pragma once

#include <vector>

#include "eframe/types.hpp"

namespace eframe {

// ---------------------------------------------------------------------------
// Elementwise and product kernels
// ---------------------------------------------------------------------------

DenseVector matvec(const DenseMatrix& a, const DenseVector& x);
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix conjugate(const DenseMatrix& a);
DenseMatrix adjoint(const DenseMatrix& a);  // conjugate transpose: (A*)_{ij} = conj(A_{ji})

DenseVector conjugate(const DenseVector& v);

/// Inner product, linear in the first argument and conjugate-linear in the
/// second: <f, g> = sum_i f_i * conj(g_i).
Complex inner(const DenseVector& f, const DenseVector& g);

/// Rank-one outer product: (f g*)_{ij} = f_i * conj(g_j).
DenseMatrix outer(const DenseVector& f, const DenseVector& g);

double norm2(const DenseVector& v);
double max_abs(const DenseVector& v);
double max_abs(const DenseMatrix& a);
double frobenius_norm(const DenseMatrix& a);

DenseVector operator+(const DenseVector& a, const DenseVector& b);
DenseVector operator-(const DenseVector& a, const DenseVector& b);
DenseVector operator*(const Complex& c, const DenseVector& v);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(const Complex& c, const DenseMatrix& a);

// ---------------------------------------------------------------------------
// Hermitian eigensolver, operator norm, inversion
// ---------------------------------------------------------------------------

struct EigenOptions {
  /// Accept A as Hermitian iff ||A - A*||_max <= hermiticity_tol_rel * ||A||_max.
  double hermiticity_tol_rel = 1e-12;
  /// Stop when the off-diagonal Frobenius mass drops below off_target_rel * ||A||_F.
  double off_target_rel = 1e-14;
  int max_sweeps = 64;
};

struct HermitianEigensystem {
  std::vector<double> values;  // nondecreasing
  DenseMatrix vectors;         // column i pairs with values[i]
};

/// Cyclic complex Jacobi rotations. Each returned pair satisfies
/// ||A v - lambda v||_2 <= 1e-10 * ||A||_2.
HermitianEigensystem hermitian_eigensystem(const DenseMatrix& a, const EigenOptions& opt = {});
std::vector<double> hermitian_eigenvalues(const DenseMatrix& a, const EigenOptions& opt = {});

/// Largest singular value, computed as sqrt(lambda_max(A* A)).
double operator_norm(const DenseMatrix& a);

/// Gauss-Jordan with partial pivoting. Throws SingularMatrixError when the
/// best pivot falls below 1e-14 * ||A||_max.
DenseMatrix invert(const DenseMatrix& a);

/// Spectral condition number ||A|| * ||A^-1||.
double condition_number(const DenseMatrix& a);

}  // namespace eframe
