#pragma once

#include <vector>

#include "eframe/frames.hpp"
#include "eframe/model.hpp"
#include "eframe/types.hpp"

namespace eframe {

/// The transformed sequence {(E Psi)_n} with (E Psi)_n = sum_{k<=N} E_{n,k} psi_k.
struct ETransformed {
  std::vector<DenseVector> terms;
};

ETransformed e_transform(const MatrixSpec& e, const VectorSequence& psi, std::size_t count,
                         std::size_t dim);

/// Materialized form: e is N x N, psis holds N vectors.
std::vector<DenseVector> e_transform_terms(const DenseMatrix& e,
                                           const std::vector<DenseVector>& psis);

DenseVector e_analysis(const MatrixSpec& e, const VectorSequence& psi, const DenseVector& f,
                       std::size_t count);
DenseVector e_synthesis(const MatrixSpec& e, const VectorSequence& psi, const DenseVector& coeff,
                        std::size_t dim);
DenseMatrix e_frame_operator(const MatrixSpec& e, const VectorSequence& psi, std::size_t count,
                             std::size_t dim);
FrameBounds e_frame_bounds(const MatrixSpec& e, const VectorSequence& psi, std::size_t count,
                           std::size_t dim);

/// || T_E c - T(E^t c) ||_2 — the synthesis factorization, an exact identity
/// at any truncation.
double verify_synthesis_factorization(const DenseMatrix& e, const std::vector<DenseVector>& psis,
                                      const DenseVector& coeff);

/// || T_E* f - conj(E) T* f ||_2 — the analysis factorization.
double verify_analysis_factorization(const DenseMatrix& e, const std::vector<DenseVector>& psis,
                                     const DenseVector& f);

/// Bounds of the E-transform of {|m_k| psi_k} against the predicted window
/// [inf|m|^2 A, sup|m|^2 B] scaled from the bounds of E Psi.
struct ScaledBoundsReport {
  FrameBounds bounds;
  double predicted_lo = 0.0;
  double predicted_hi = 0.0;
  bool within = false;
};

ScaledBoundsReport scaled_sequence_bounds(const MatrixSpec& e, const VectorSequence& psi,
                                          const ScalarSequence& m, const TruncationConfig& cfg);

/// Partial sum sum_{n,k<=N} ||c_n E_{n,k} psi_k|| against the Cauchy-Schwarz
/// bound ||c||_2 (sum_k ||psi_k||^2)^{1/2} (sum |E|^2)^{1/2}.
struct AbsConvergenceReport {
  double partial = 0.0;
  double bound = 0.0;
  bool within = false;
};

AbsConvergenceReport absolute_convergence_bound(const MatrixSpec& e, const VectorSequence& psi,
                                                const DenseVector& coeff,
                                                const TruncationConfig& cfg);

/// For psi_k = U (E^-1 {e_j})_k the transform returns (E Psi)_n = U e_n; the
/// residual is max_n ||(E Psi)_n - U e_n||_2 at truncation. Basis directions
/// beyond U's dimension enter as zero vectors.
double riesz_etransform_check(const DenseMatrix& u, const MatrixSpec& e, std::size_t count);

}  // namespace eframe
