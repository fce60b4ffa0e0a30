#include "eframe/frames.hpp"

#include <algorithm>

#include "eframe/errors.hpp"
#include "eframe/linalg.hpp"

namespace eframe {

namespace {

std::size_t common_dim(const std::vector<DenseVector>& psis) {
  if (psis.empty()) throw DimensionError("frame operations need at least one vector");
  const std::size_t d = psis.front().dim();
  for (const DenseVector& v : psis)
    if (v.dim() != d) throw DimensionError("sequence vectors have mixed dimensions");
  return d;
}

}  // namespace

DenseVector analysis(const std::vector<DenseVector>& psis, const DenseVector& f) {
  const std::size_t d = common_dim(psis);
  if (f.dim() != d) throw DimensionError("analysis: f has wrong dimension");
  DenseVector coeff(psis.size());
  for (std::size_t k = 0; k < psis.size(); ++k) coeff[k] = inner(f, psis[k]);
  return coeff;
}

DenseVector synthesis(const std::vector<DenseVector>& psis, const DenseVector& coeff) {
  const std::size_t d = common_dim(psis);
  if (coeff.dim() != psis.size())
    throw DimensionError("synthesis: coefficient count != sequence length");
  DenseVector f(d);
  for (std::size_t k = 0; k < psis.size(); ++k)
    for (std::size_t i = 0; i < d; ++i) f[i] += coeff[k] * psis[k][i];
  return f;
}

DenseMatrix synthesis_matrix(const std::vector<DenseVector>& psis) {
  const std::size_t d = common_dim(psis);
  DenseMatrix t(d, psis.size());
  for (std::size_t k = 0; k < psis.size(); ++k)
    for (std::size_t i = 0; i < d; ++i) t(i, k) = psis[k][i];
  return t;
}

DenseMatrix frame_operator(const std::vector<DenseVector>& psis) {
  const std::size_t d = common_dim(psis);
  DenseMatrix s(d, d);
  for (const DenseVector& psi : psis)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) s(i, j) += psi[i] * std::conj(psi[j]);
  return s;
}

FrameBounds frame_bounds(const std::vector<DenseVector>& psis) {
  const std::vector<double> eigs = hermitian_eigenvalues(frame_operator(psis));
  return FrameBounds{eigs.front(), eigs.back()};
}

std::vector<DenseVector> canonical_dual(const std::vector<DenseVector>& psis,
                                        double residual_tol) {
  const DenseMatrix s = frame_operator(psis);
  const FrameBounds bounds = frame_bounds(psis);
  if (!(bounds.lower > residual_tol))
    throw PreconditionError("canonical_dual: not a frame at this truncation");
  const DenseMatrix sinv = invert(s);
  std::vector<DenseVector> dual;
  dual.reserve(psis.size());
  for (const DenseVector& psi : psis) dual.push_back(matvec(sinv, psi));
  return dual;
}

bool is_frame(const std::vector<DenseVector>& psis, double residual_tol) {
  return frame_bounds(psis).lower > residual_tol;
}

BesselCheck is_bessel(const std::vector<DenseVector>& psis) {
  BesselCheck out;
  out.bessel_at_truncation = true;      // finite sums are always bounded
  out.upper_bound = frame_bounds(psis).upper;
  out.truncation_caveat = true;
  return out;
}

BesselLadder bessel_growth_ladder(const VectorSequence& seq, const TruncationConfig& cfg,
                                  double growth_factor) {
  BesselLadder out;
  for (std::size_t step = 0; step < 3; ++step) {
    const std::size_t factor = std::size_t{1} << step;
    const std::size_t count = cfg.seq_len * factor;
    const std::size_t dim = cfg.ambient_dim * factor;
    out.seq_lens[step] = count;
    out.upper_bounds[step] = frame_bounds(materialize_sequence(seq, count, dim)).upper;
  }
  out.bound_grows = out.upper_bounds[1] > growth_factor * out.upper_bounds[0] &&
                    out.upper_bounds[2] > growth_factor * out.upper_bounds[1];
  return out;
}

}  // namespace eframe
