#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "eframe/errors.hpp"

namespace eframe {

using Complex = std::complex<double>;

/// Hybrid absolute/relative tolerance: a deviation passes at a given scale
/// iff it is <= rel * scale + abs.
struct Tolerance {
  double rel = 1e-10;
  double abs = 1e-14;

  [[nodiscard]] double at(double scale) const { return rel * scale + abs; }
};

/// Column vector over the complex doubles.
class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(std::size_t dim) : entries_(dim, Complex{0.0, 0.0}) {}
  explicit DenseVector(std::vector<Complex> entries) : entries_(std::move(entries)) {}
  DenseVector(std::initializer_list<Complex> entries) : entries_(entries) {}

  /// Standard basis vector e_index (0-based) in dimension dim.
  static DenseVector basis(std::size_t index, std::size_t dim) {
    if (index >= dim) throw DimensionError("basis index out of range");
    DenseVector v(dim);
    v.entries_[index] = Complex{1.0, 0.0};
    return v;
  }

  static DenseVector from_real(std::initializer_list<double> entries) {
    DenseVector v;
    v.entries_.reserve(entries.size());
    for (double x : entries) v.entries_.emplace_back(x, 0.0);
    return v;
  }

  std::size_t dim() const noexcept { return entries_.size(); }
  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::vector<Complex>& raw() noexcept { return entries_; }
  const std::vector<Complex>& raw() const noexcept { return entries_; }

 private:
  std::vector<Complex> entries_;
};

/// Row-major rectangular matrix over the complex doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw DimensionError("entry count does not match rows*cols");
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex{1.0, 0.0};
    return m;
  }

  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    DenseMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    m.entries_.reserve(m.rows_ * m.cols_);
    for (const auto& r : rows) {
      if (r.size() != m.cols_) throw DimensionError("ragged row list");
      m.entries_.insert(m.entries_.end(), r.begin(), r.end());
    }
    return m;
  }

  static DenseMatrix from_real(std::initializer_list<std::initializer_list<double>> rows) {
    DenseMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    m.entries_.reserve(m.rows_ * m.cols_);
    for (const auto& r : rows) {
      if (r.size() != m.cols_) throw DimensionError("ragged row list");
      for (double x : r) m.entries_.emplace_back(x, 0.0);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::vector<Complex>& raw() noexcept { return entries_; }
  const std::vector<Complex>& raw() const noexcept { return entries_; }

  /// Column j as a vector.
  DenseVector column(std::size_t j) const {
    DenseVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

bool all_finite(const DenseVector& v);
bool all_finite(const DenseMatrix& m);

}  // namespace eframe
