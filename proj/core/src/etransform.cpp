#include "eframe/etransform.hpp"

#include <algorithm>
#include <cmath>

#include "eframe/errors.hpp"
#include "eframe/linalg.hpp"

namespace eframe {

std::vector<DenseVector> e_transform_terms(const DenseMatrix& e,
                                           const std::vector<DenseVector>& psis) {
  if (e.rows() != e.cols() || e.rows() != psis.size())
    throw DimensionError("e_transform: matrix truncation must match the term count");
  // Columns of P E^t are the transformed terms, P holding psi_k as columns.
  const DenseMatrix p = synthesis_matrix(psis);
  const DenseMatrix terms = matmul(p, transpose(e));
  std::vector<DenseVector> out;
  out.reserve(psis.size());
  for (std::size_t n = 0; n < psis.size(); ++n) out.push_back(terms.column(n));
  return out;
}

ETransformed e_transform(const MatrixSpec& e, const VectorSequence& psi, std::size_t count,
                         std::size_t dim) {
  return ETransformed{
      e_transform_terms(materialize_matrix(e, count), materialize_sequence(psi, count, dim))};
}

DenseVector e_analysis(const MatrixSpec& e, const VectorSequence& psi, const DenseVector& f,
                       std::size_t count) {
  return analysis(e_transform(e, psi, count, f.dim()).terms, f);
}

DenseVector e_synthesis(const MatrixSpec& e, const VectorSequence& psi, const DenseVector& coeff,
                        std::size_t dim) {
  return synthesis(e_transform(e, psi, coeff.dim(), dim).terms, coeff);
}

DenseMatrix e_frame_operator(const MatrixSpec& e, const VectorSequence& psi, std::size_t count,
                             std::size_t dim) {
  return frame_operator(e_transform(e, psi, count, dim).terms);
}

FrameBounds e_frame_bounds(const MatrixSpec& e, const VectorSequence& psi, std::size_t count,
                           std::size_t dim) {
  return frame_bounds(e_transform(e, psi, count, dim).terms);
}

double verify_synthesis_factorization(const DenseMatrix& e, const std::vector<DenseVector>& psis,
                                      const DenseVector& coeff) {
  const DenseVector lhs = synthesis(e_transform_terms(e, psis), coeff);
  const DenseVector rhs = synthesis(psis, matvec(transpose(e), coeff));
  return norm2(lhs - rhs);
}

double verify_analysis_factorization(const DenseMatrix& e, const std::vector<DenseVector>& psis,
                                     const DenseVector& f) {
  const DenseVector lhs = analysis(e_transform_terms(e, psis), f);
  const DenseVector rhs = matvec(conjugate(e), analysis(psis, f));
  return norm2(lhs - rhs);
}

ScaledBoundsReport scaled_sequence_bounds(const MatrixSpec& e, const VectorSequence& psi,
                                          const ScalarSequence& m, const TruncationConfig& cfg) {
  const std::size_t n = cfg.seq_len;
  const SymbolClassification cls = classify_symbol(m, n);
  if (!cls.semi_normalized_on_window)
    throw PreconditionError("scaled_sequence_bounds: symbol not semi-normalized on the window");

  const DenseMatrix en = materialize_matrix(e, n);
  const std::vector<DenseVector> psis = materialize_sequence(psi, n, cfg.ambient_dim);
  const FrameBounds base = frame_bounds(e_transform_terms(en, psis));

  std::vector<DenseVector> scaled = psis;
  const std::vector<Complex> values = m.rule.evaluate(n);
  for (std::size_t k = 0; k < n; ++k)
    scaled[k] = Complex{std::abs(values[k]), 0.0} * scaled[k];

  ScaledBoundsReport out;
  out.bounds = frame_bounds(e_transform_terms(en, scaled));
  out.predicted_lo = cls.window_inf * cls.window_inf * base.lower;
  out.predicted_hi = cls.window_sup * cls.window_sup * base.upper;
  const Tolerance tol;
  const double slack = tol.at(std::max(out.predicted_hi, out.bounds.upper));
  out.within = out.bounds.lower >= out.predicted_lo - slack &&
               out.bounds.upper <= out.predicted_hi + slack;
  return out;
}

AbsConvergenceReport absolute_convergence_bound(const MatrixSpec& e, const VectorSequence& psi,
                                                const DenseVector& coeff,
                                                const TruncationConfig& cfg) {
  const std::size_t n = cfg.seq_len;
  if (coeff.dim() != n)
    throw DimensionError("absolute_convergence_bound: coefficient length != seq_len");
  const DenseMatrix en = materialize_matrix(e, n);
  const std::vector<DenseVector> psis = materialize_sequence(psi, n, cfg.ambient_dim);

  std::vector<double> psi_norms(n);
  double psi_sq = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    psi_norms[k] = norm2(psis[k]);
    psi_sq += psi_norms[k] * psi_norms[k];
  }

  AbsConvergenceReport out;
  for (std::size_t row = 0; row < n; ++row) {
    const double cmag = std::abs(coeff[row]);
    if (cmag == 0.0) continue;
    for (std::size_t k = 0; k < n; ++k)
      out.partial += cmag * std::abs(en(row, k)) * psi_norms[k];
  }
  out.bound = norm2(coeff) * std::sqrt(psi_sq) * std::sqrt(hs_partial_sum(e, n).partial);
  const Tolerance tol{1e-12, 1e-14};
  out.within = out.partial <= out.bound + tol.at(out.bound);
  return out;
}

double riesz_etransform_check(const DenseMatrix& u, const MatrixSpec& e, std::size_t count) {
  if (u.rows() != u.cols()) throw DimensionError("riesz check: U must be square");
  const std::size_t dim = u.rows();
  const DenseMatrix en = materialize_matrix(e, count);
  const DenseMatrix einv = invert(en);
  invert(u);  // reject singular U up front

  // psi_k = U (E^-1 {e_j})_k; the k-th term is U applied to row k of E^-1,
  // with basis directions beyond dim entering as zero.
  std::vector<DenseVector> psis;
  psis.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    DenseVector v(dim);
    for (std::size_t j = 0; j < std::min(dim, count); ++j) v[j] = einv(k, j);
    psis.push_back(matvec(u, v));
  }

  const std::vector<DenseVector> terms = e_transform_terms(en, psis);
  double residual = 0.0;
  for (std::size_t n = 0; n < count; ++n) {
    DenseVector expected(dim);
    if (n < dim) expected = u.column(n);
    residual = std::max(residual, norm2(terms[n] - expected));
  }
  return residual;
}

}  // namespace eframe
