#include "eframe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "eframe/errors.hpp"

namespace eframe {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw DimensionError(message);
}

}  // namespace

bool all_finite(const DenseVector& v) {
  for (const Complex& z : v.entries())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

bool all_finite(const DenseMatrix& m) {
  for (const Complex& z : m.entries())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

DenseVector matvec(const DenseMatrix& a, const DenseVector& x) {
  require(a.cols() == x.dim(), "matvec: A.cols != x.dim");
  DenseVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.cols() == b.rows(), "matmul: A.cols != B.rows");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

DenseMatrix conjugate(const DenseMatrix& a) {
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = std::conj(a(i, j));
  return c;
}

DenseMatrix adjoint(const DenseMatrix& a) {
  DenseMatrix h(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) h(j, i) = std::conj(a(i, j));
  return h;
}

DenseVector conjugate(const DenseVector& v) {
  DenseVector c(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) c[i] = std::conj(v[i]);
  return c;
}

Complex inner(const DenseVector& f, const DenseVector& g) {
  require(f.dim() == g.dim(), "inner: dimension mismatch");
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < f.dim(); ++i) acc += f[i] * std::conj(g[i]);
  return acc;
}

DenseMatrix outer(const DenseVector& f, const DenseVector& g) {
  DenseMatrix m(f.dim(), g.dim());
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) m(i, j) = f[i] * std::conj(g[j]);
  return m;
}

double norm2(const DenseVector& v) {
  double acc = 0.0;
  for (const Complex& z : v.entries()) acc += std::norm(z);
  return std::sqrt(acc);
}

double max_abs(const DenseVector& v) {
  double m = 0.0;
  for (const Complex& z : v.entries()) m = std::max(m, std::abs(z));
  return m;
}

double max_abs(const DenseMatrix& a) {
  double m = 0.0;
  for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double frobenius_norm(const DenseMatrix& a) {
  double acc = 0.0;
  for (const Complex& z : a.entries()) acc += std::norm(z);
  return std::sqrt(acc);
}

DenseVector operator+(const DenseVector& a, const DenseVector& b) {
  require(a.dim() == b.dim(), "vector +: dimension mismatch");
  DenseVector c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] + b[i];
  return c;
}

DenseVector operator-(const DenseVector& a, const DenseVector& b) {
  require(a.dim() == b.dim(), "vector -: dimension mismatch");
  DenseVector c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] - b[i];
  return c;
}

DenseVector operator*(const Complex& c, const DenseVector& v) {
  DenseVector w(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) w[i] = c * v[i];
  return w;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix +: shape mismatch");
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.raw().size(); ++i) c.raw()[i] = a.raw()[i] + b.raw()[i];
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix -: shape mismatch");
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.raw().size(); ++i) c.raw()[i] = a.raw()[i] - b.raw()[i];
  return c;
}

DenseMatrix operator*(const Complex& c, const DenseMatrix& a) {
  DenseMatrix b(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.raw().size(); ++i) b.raw()[i] = c * a.raw()[i];
  return b;
}

// ---------------------------------------------------------------------------
// Hermitian Jacobi eigensolver
// ---------------------------------------------------------------------------

namespace {

double offdiag_norm(const DenseMatrix& h) {
  double acc = 0.0;
  const std::size_t n = h.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) acc += 2.0 * std::norm(h(i, j));
  return std::sqrt(acc);
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(const DenseMatrix& a, const EigenOptions& opt) {
  if (a.rows() != a.cols()) throw DimensionError("hermitian_eigensystem: matrix not square");
  if (!all_finite(a)) throw PreconditionError("hermitian_eigensystem: non-finite entries");
  const std::size_t n = a.rows();

  const double scale = max_abs(a);
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      asym = std::max(asym, std::abs(a(i, j) - std::conj(a(j, i))));
  if (asym > opt.hermiticity_tol_rel * scale)
    throw PreconditionError("hermitian_eigensystem: matrix not Hermitian within tolerance");

  // Symmetrized working copy; the rotations preserve hermiticity exactly on
  // the entries they rewrite.
  DenseMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  DenseMatrix v = DenseMatrix::identity(n);

  const double fro = frobenius_norm(h);
  const double target = opt.off_target_rel * fro;

  int sweep = 0;
  while (offdiag_norm(h) > target) {
    if (++sweep > opt.max_sweeps)
      throw ConvergenceError("hermitian_eigensystem: sweep cap exceeded");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex gamma = h(p, q);
        const double g = std::abs(gamma);
        if (g <= 1e-300) continue;
        const Complex phase = gamma / g;  // e^{i phi}
        const double alpha = h(p, p).real();
        const double beta = h(q, q).real();
        const double tau = (beta - alpha) / (2.0 * g);
        const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                    : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex sp = s * phase;             // s e^{i phi}
        const Complex spc = s * std::conj(phase); // s e^{-i phi}

        // A <- A R with R_pp = c, R_pq = s, R_qp = -s e^{-i phi}, R_qq = c e^{-i phi}
        for (std::size_t i = 0; i < n; ++i) {
          const Complex hp = h(i, p), hq = h(i, q);
          h(i, p) = c * hp - spc * hq;
          h(i, q) = s * hp + c * std::conj(phase) * hq;
        }
        // A <- R* A
        for (std::size_t j = 0; j < n; ++j) {
          const Complex hp = h(p, j), hq = h(q, j);
          h(p, j) = c * hp - sp * hq;
          h(q, j) = s * hp + c * phase * hq;
        }
        // Closed forms for the rotated 2x2 block kill rounding asymmetry.
        h(p, p) = Complex{alpha - t * g, 0.0};
        h(q, q) = Complex{beta + t * g, 0.0};
        h(p, q) = Complex{0.0, 0.0};
        h(q, p) = Complex{0.0, 0.0};

        for (std::size_t i = 0; i < n; ++i) {
          const Complex vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp - spc * vq;
          v(i, q) = s * vp + c * std::conj(phase) * vq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return h(i, i).real() < h(j, j).real(); });

  HermitianEigensystem out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = h(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix& a, const EigenOptions& opt) {
  return hermitian_eigensystem(a, opt).values;
}

double operator_norm(const DenseMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  // Work with the smaller Gram matrix of A*A and A A*.
  const DenseMatrix gram =
      a.rows() >= a.cols() ? matmul(adjoint(a), a) : matmul(a, adjoint(a));
  const std::vector<double> eigs = hermitian_eigenvalues(gram);
  const double top = eigs.empty() ? 0.0 : eigs.back();
  return std::sqrt(std::max(top, 0.0));
}

DenseMatrix invert(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("invert: matrix not square");
  if (!all_finite(a)) throw PreconditionError("invert: non-finite entries");
  const std::size_t n = a.rows();
  const double scale = max_abs(a);
  const double pivot_floor = 1e-14 * scale;

  DenseMatrix work = a;
  DenseMatrix inv = DenseMatrix::identity(n);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(work(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      const double cand = std::abs(work(r, k));
      if (cand > best) {
        best = cand;
        pivot = r;
      }
    }
    if (best <= pivot_floor)
      throw SingularMatrixError("invert: singular to working precision");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(k, j), work(pivot, j));
        std::swap(inv(k, j), inv(pivot, j));
      }
    }
    const Complex d = work(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      work(k, j) /= d;
      inv(k, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      const Complex factor = work(r, k);
      if (factor == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= factor * work(k, j);
        inv(r, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

double condition_number(const DenseMatrix& a) {
  return operator_norm(a) * operator_norm(invert(a));
}

}  // namespace eframe
