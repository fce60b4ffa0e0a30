#include "eframe/rng.hpp"

#include <cmath>
#include <numbers>

#include "eframe/linalg.hpp"

namespace eframe {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_case_seed(std::uint64_t base_seed, std::string_view label,
                               std::uint64_t index) {
  // FNV-1a over the label, then splitmix-style mixing with seed and index.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::uint64_t state = base_seed ^ h ^ (index * 0xd1342543de82ef95ULL);
  return splitmix64_next(state);
}

double Rng::u01() {
  return static_cast<double>(splitmix64_next(state_) >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

Complex Rng::unit_box() { return Complex{uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

Complex Rng::unit_phase() {
  const double theta = uniform(0.0, 2.0 * std::numbers::pi);
  return Complex{std::cos(theta), std::sin(theta)};
}

DenseVector Rng::vector(std::size_t dim, double scale) {
  DenseVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = scale * unit_box();
  return v;
}

DenseMatrix Rng::matrix(std::size_t rows, std::size_t cols, double scale) {
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = scale * unit_box();
  return m;
}

DenseMatrix Rng::hs_scaled_matrix(std::size_t n) {
  return matrix(n, n, 1.0 / static_cast<double>(n));
}

std::vector<Complex> Rng::semi_normalized_symbol(std::size_t count, double lo, double hi,
                                                 int sign, bool complex_phase) {
  std::vector<Complex> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double mag = uniform(lo, hi);
    out[k] = complex_phase ? mag * unit_phase()
                           : Complex{sign < 0 ? -mag : mag, 0.0};
  }
  return out;
}

DenseMatrix Rng::well_conditioned(std::size_t dim, double spread) {
  const DenseMatrix r = matrix(dim, dim, 1.0);
  const double norm = operator_norm(r);
  DenseMatrix u = DenseMatrix::identity(dim);
  if (norm > 0.0) u = u + Complex{spread / norm, 0.0} * r;
  return u;
}

std::vector<DenseVector> Rng::near_identity_frame(std::size_t count, std::size_t dim,
                                                  double perturbation) {
  DenseMatrix r = matrix(dim, count, 1.0);
  const double norm = operator_norm(r);
  const double scale = norm > 0.0 ? perturbation / norm : 0.0;
  std::vector<DenseVector> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    DenseVector v(dim);
    if (k < dim) v[k] = Complex{1.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i) v[i] += scale * r(i, k);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace eframe
