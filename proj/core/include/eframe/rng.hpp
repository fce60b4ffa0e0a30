#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "eframe/types.hpp"

namespace eframe {

/// splitmix64 step; self-contained so streams do not depend on the standard
/// library implementation.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// Stable per-case seed mixing the base seed, the suite name and the case index.
std::uint64_t derive_case_seed(std::uint64_t base_seed, std::string_view label,
                               std::uint64_t index);

/// Small deterministic generator for randomized verification cases.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  double u01();                              // [0, 1)
  double uniform(double lo, double hi);      // [lo, hi)
  Complex unit_box();                        // Re, Im uniform in [-1, 1)
  Complex unit_phase();                      // e^{i theta}

  DenseVector vector(std::size_t dim, double scale = 1.0);
  DenseMatrix matrix(std::size_t rows, std::size_t cols, double scale = 1.0);

  /// Independent zero-mean entries scaled by 1/n, so the Hilbert-Schmidt
  /// partial sum stays O(1).
  DenseMatrix hs_scaled_matrix(std::size_t n);

  /// |m_k| uniform in [lo, hi]; sign * that value, optionally spun by a
  /// random phase (in which case the sign is ignored).
  std::vector<Complex> semi_normalized_symbol(std::size_t count, double lo = 0.5, double hi = 2.0,
                                              int sign = +1, bool complex_phase = false);

  /// I + spread * R / ||R||; invertible with condition number at most
  /// (1 + spread) / (1 - spread) for spread < 1.
  DenseMatrix well_conditioned(std::size_t dim, double spread);

  /// count >= dim vectors forming a frame: perturbed basis columns with
  /// lambda_min(S) >= (1 - perturbation)^2.
  std::vector<DenseVector> near_identity_frame(std::size_t count, std::size_t dim,
                                               double perturbation);

 private:
  std::uint64_t state_;
};

}  // namespace eframe
