#pragma once

// Test-side oracles, written independently of the library code paths they
// check: plain index loops, no shared kernels.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "eframe/types.hpp"

namespace oracles {

using eframe::Complex;
using eframe::DenseMatrix;
using eframe::DenseVector;

/// Frame operator as an explicit double loop over rank-one updates.
inline DenseMatrix frame_operator_rank_one(const std::vector<DenseVector>& psis) {
  const std::size_t d = psis.front().dim();
  DenseMatrix s(d, d);
  for (const DenseVector& psi : psis)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) s(i, j) += psi[i] * std::conj(psi[j]);
  return s;
}

/// Multiplier entries M_{ij} = sum_n m_n epsi_n[i] conj(ephi_n[j]) summed
/// directly, term by term.
inline DenseMatrix multiplier_matrix_triple_sum(const std::vector<Complex>& symbol,
                                                const std::vector<DenseVector>& epsi,
                                                const std::vector<DenseVector>& ephi) {
  const std::size_t rows = epsi.front().dim();
  const std::size_t cols = ephi.front().dim();
  DenseMatrix m(rows, cols);
  for (std::size_t n = 0; n < symbol.size(); ++n)
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) += symbol[n] * epsi[n][i] * std::conj(ephi[n][j]);
  return m;
}

/// (E Psi)_n by direct summation, no matrix product.
inline std::vector<DenseVector> e_transform_direct(const DenseMatrix& e,
                                                   const std::vector<DenseVector>& psis) {
  const std::size_t d = psis.front().dim();
  std::vector<DenseVector> terms;
  for (std::size_t n = 0; n < psis.size(); ++n) {
    DenseVector t(d);
    for (std::size_t k = 0; k < psis.size(); ++k)
      for (std::size_t i = 0; i < d; ++i) t[i] += e(n, k) * psis[k][i];
    terms.push_back(t);
  }
  return terms;
}

/// sum_{n<=N} n^{-2p}, the Hilbert-Schmidt partial sum of diag(n^-p).
inline double inverse_power_partial_sum(std::size_t n, double p) {
  double acc = 0.0;
  for (std::size_t k = 1; k <= n; ++k) acc += std::pow(static_cast<double>(k), -2.0 * p);
  return acc;
}

}  // namespace oracles
