#pragma once

#include <array>
#include <vector>

#include "eframe/model.hpp"
#include "eframe/types.hpp"

namespace eframe {

/// Optimal constants A <= B of A||f||^2 <= sum_k |<f, psi_k>|^2 <= B||f||^2
/// at the current truncation.
struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// {<f, psi_k>}_k as a vector of length N.
DenseVector analysis(const std::vector<DenseVector>& psis, const DenseVector& f);

/// sum_k c_k psi_k.
DenseVector synthesis(const std::vector<DenseVector>& psis, const DenseVector& coeff);

/// d x N matrix whose k-th column is psi_k; analysis is its adjoint.
DenseMatrix synthesis_matrix(const std::vector<DenseVector>& psis);

/// Frame operator S = sum_k psi_k psi_k*, accumulated as rank-one updates.
DenseMatrix frame_operator(const std::vector<DenseVector>& psis);

/// (lambda_min(S), lambda_max(S)).
FrameBounds frame_bounds(const std::vector<DenseVector>& psis);

/// Canonical dual {S^-1 psi_k}. Requires lambda_min(S) > residual_tol.
std::vector<DenseVector> canonical_dual(const std::vector<DenseVector>& psis, double residual_tol);

/// A sequence is a frame at this truncation iff lambda_min(S) > residual_tol.
bool is_frame(const std::vector<DenseVector>& psis, double residual_tol);

/// Every finite sequence is Bessel; the flag records that the finite window
/// cannot certify the infinite claim and the bound may grow with it.
struct BesselCheck {
  bool bessel_at_truncation = true;
  double upper_bound = 0.0;
  bool truncation_caveat = true;
};

BesselCheck is_bessel(const std::vector<DenseVector>& psis);

/// Upper frame bound across the widening windows (N, d), (2N, 2d), (4N, 4d),
/// so a divergent Bessel bound becomes observable at desk scale.
struct BesselLadder {
  std::array<std::size_t, 3> seq_lens{};
  std::array<double, 3> upper_bounds{};
  bool bound_grows = false;
};

BesselLadder bessel_growth_ladder(const VectorSequence& seq, const TruncationConfig& cfg,
                                  double growth_factor = 1.5);

}  // namespace eframe
