#include "eframe/model.hpp"

#include <cmath>
#include <utility>

#include "eframe/errors.hpp"
#include "eframe/linalg.hpp"

namespace eframe {

void TruncationConfig::validate() const {
  if (ambient_dim < 1) throw InvalidInputError("truncation: ambient_dim must be >= 1");
  if (seq_len < 1) throw InvalidInputError("truncation: seq_len must be >= 1");
  if (!(residual_tol > 0.0)) throw InvalidInputError("truncation: residual_tol must be > 0");
}

// ---------------------------------------------------------------------------
// ScalarRule
// ---------------------------------------------------------------------------

ScalarRule ScalarRule::constant(Complex value) { return ScalarRule(Node{Constant{value}}); }

ScalarRule ScalarRule::power(double exponent) { return ScalarRule(Node{Power{exponent}}); }

ScalarRule ScalarRule::inverse_power(double exponent) {
  return ScalarRule(Node{InversePower{exponent}});
}

ScalarRule ScalarRule::explicit_values(std::vector<Complex> values) {
  if (values.empty()) throw InvalidInputError("explicit rule: empty value list");
  return ScalarRule(Node{Explicit{std::move(values)}});
}

ScalarRule ScalarRule::prefix_then_rule(std::vector<Complex> prefix, ScalarRule tail,
                                        std::size_t tail_offset) {
  PrefixThenRule node;
  node.prefix = std::move(prefix);
  node.tail = std::make_shared<const ScalarRule>(std::move(tail));
  node.tail_offset = tail_offset;
  return ScalarRule(Node{std::move(node)});
}

Complex ScalarRule::eval(std::size_t k) const {
  if (k == 0) throw InvalidInputError("scalar rule: index is 1-based");
  struct Eval {
    std::size_t k;
    Complex operator()(const Constant& c) const { return c.value; }
    Complex operator()(const Power& p) const {
      return Complex{std::pow(static_cast<double>(k), p.exponent), 0.0};
    }
    Complex operator()(const InversePower& p) const {
      return Complex{std::pow(static_cast<double>(k), -p.exponent), 0.0};
    }
    Complex operator()(const Explicit& e) const {
      if (k > e.values.size())
        throw InvalidInputError("explicit rule: fewer values than requested index");
      return e.values[k - 1];
    }
    Complex operator()(const PrefixThenRule& p) const {
      if (k <= p.prefix.size()) return p.prefix[k - 1];
      if (k <= p.tail_offset)
        throw InvalidInputError("prefix rule: tail index not positive");
      return p.tail->eval(k - p.tail_offset);
    }
  };
  return std::visit(Eval{k}, node_);
}

std::vector<Complex> ScalarRule::evaluate(std::size_t count) const {
  std::vector<Complex> out;
  out.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) out.push_back(eval(k));
  return out;
}

// ---------------------------------------------------------------------------
// MatrixSpec
// ---------------------------------------------------------------------------

MatrixSpec MatrixSpec::dense(DenseMatrix entries) {
  return MatrixSpec(Node{Dense{std::move(entries)}});
}

MatrixSpec MatrixSpec::diagonal(ScalarRule rule) {
  return MatrixSpec(Node{Diagonal{std::move(rule)}});
}

MatrixSpec MatrixSpec::banded(std::map<long, ScalarRule> bands) {
  return MatrixSpec(Node{Banded{std::move(bands)}});
}

MatrixSpec MatrixSpec::dense_prefix_plus_diagonal_rule(DenseMatrix prefix, ScalarRule rule) {
  if (prefix.rows() != prefix.cols())
    throw InvalidInputError("matrix prefix block must be square");
  return MatrixSpec(Node{DensePrefixPlusDiagonalRule{std::move(prefix), std::move(rule)}});
}

bool MatrixSpec::is_diagonal() const noexcept {
  return std::holds_alternative<Diagonal>(node_);
}

DenseMatrix materialize_matrix(const MatrixSpec& spec, std::size_t n) {
  struct Materialize {
    std::size_t n;
    DenseMatrix operator()(const MatrixSpec::Dense& d) const {
      if (d.entries.rows() < n || d.entries.cols() < n)
        throw InvalidInputError("dense matrix data shorter than requested truncation");
      DenseMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d.entries(i, j);
      return m;
    }
    DenseMatrix operator()(const MatrixSpec::Diagonal& d) const {
      DenseMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) m(i, i) = d.rule.eval(i + 1);
      return m;
    }
    DenseMatrix operator()(const MatrixSpec::Banded& b) const {
      DenseMatrix m(n, n);
      for (const auto& [offset, rule] : b.bands) {
        for (std::size_t i = 0; i < n; ++i) {
          const long j = static_cast<long>(i) + offset;
          if (j < 0 || j >= static_cast<long>(n)) continue;
          m(i, static_cast<std::size_t>(j)) = rule.eval(i + 1);
        }
      }
      return m;
    }
    DenseMatrix operator()(const MatrixSpec::DensePrefixPlusDiagonalRule& p) const {
      DenseMatrix m(n, n);
      const std::size_t block = std::min(n, p.prefix.rows());
      for (std::size_t i = 0; i < block; ++i)
        for (std::size_t j = 0; j < block; ++j) m(i, j) = p.prefix(i, j);
      for (std::size_t i = block; i < n; ++i) m(i, i) = p.rule.eval(i + 1);
      return m;
    }
  };
  return std::visit(Materialize{n}, spec.node());
}

// ---------------------------------------------------------------------------
// VectorSequence
// ---------------------------------------------------------------------------

VectorSequence VectorSequence::scaled_basis(ScalarRule rule) {
  return VectorSequence(Node{ScaledBasis{std::move(rule)}});
}

VectorSequence VectorSequence::explicit_vectors(std::vector<DenseVector> vectors) {
  return VectorSequence(Node{Explicit{std::move(vectors)}});
}

VectorSequence VectorSequence::prefix_then_scaled_basis(std::vector<DenseVector> prefix,
                                                        ScalarRule tail,
                                                        std::size_t tail_offset) {
  PrefixThenScaledBasis node{std::move(prefix), std::move(tail), tail_offset};
  return VectorSequence(Node{std::move(node)});
}

VectorSequence VectorSequence::transformed(DenseMatrix u, VectorSequence base) {
  Transformed node{std::move(u), std::make_shared<const VectorSequence>(std::move(base))};
  return VectorSequence(Node{std::move(node)});
}

namespace {

DenseVector embed_in_dim(const DenseVector& v, std::size_t dim) {
  DenseVector out(dim);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i < dim) {
      out[i] = v[i];
    } else if (v[i] != Complex{0.0, 0.0}) {
      throw DimensionError("sequence vector has nonzero entries beyond the ambient dimension");
    }
  }
  return out;
}

DenseVector scaled_basis_term(const Complex& value, std::size_t k, std::size_t dim) {
  DenseVector v(dim);
  if (k - 1 < dim) v[k - 1] = value;  // directions beyond dim truncate to zero
  return v;
}

}  // namespace

std::vector<DenseVector> materialize_sequence(const VectorSequence& seq, std::size_t count,
                                              std::size_t dim) {
  struct Materialize {
    std::size_t count;
    std::size_t dim;
    std::vector<DenseVector> operator()(const VectorSequence::ScaledBasis& s) const {
      std::vector<DenseVector> out;
      out.reserve(count);
      for (std::size_t k = 1; k <= count; ++k)
        out.push_back(scaled_basis_term(s.rule.eval(k), k, dim));
      return out;
    }
    std::vector<DenseVector> operator()(const VectorSequence::Explicit& e) const {
      if (e.vectors.size() < count)
        throw InvalidInputError("explicit sequence: fewer vectors than requested terms");
      std::vector<DenseVector> out;
      out.reserve(count);
      for (std::size_t k = 0; k < count; ++k) out.push_back(embed_in_dim(e.vectors[k], dim));
      return out;
    }
    std::vector<DenseVector> operator()(const VectorSequence::PrefixThenScaledBasis& p) const {
      std::vector<DenseVector> out;
      out.reserve(count);
      for (std::size_t k = 1; k <= count; ++k) {
        if (k <= p.prefix.size()) {
          out.push_back(embed_in_dim(p.prefix[k - 1], dim));
        } else {
          if (k <= p.tail_offset)
            throw InvalidInputError("prefix sequence: tail index not positive");
          out.push_back(scaled_basis_term(p.tail.eval(k - p.tail_offset), k, dim));
        }
      }
      return out;
    }
    std::vector<DenseVector> operator()(const VectorSequence::Transformed& t) const {
      if (t.u.rows() != dim || t.u.cols() != dim)
        throw DimensionError("transformed sequence: U must be dim x dim");
      std::vector<DenseVector> base = materialize_sequence(*t.base, count, dim);
      for (DenseVector& v : base) v = matvec(t.u, v);
      return base;
    }
  };
  return std::visit(Materialize{count, dim}, seq.node());
}

// ---------------------------------------------------------------------------
// Symbol classification and the Hilbert-Schmidt diagnostic
// ---------------------------------------------------------------------------

SymbolClassification classify_symbol(const ScalarSequence& m, std::size_t count) {
  const std::vector<Complex> values = m.rule.evaluate(count);
  SymbolClassification out;
  if (values.empty()) return out;

  double max_mag = 0.0;
  for (const Complex& z : values) max_mag = std::max(max_mag, std::abs(z));
  const double imag_tol = 1e-12 * max_mag;

  out.window_inf = std::abs(values.front());
  out.window_sup = out.window_inf;
  bool any_imag = false;
  bool all_pos = true;
  bool all_neg = true;
  for (const Complex& z : values) {
    const double mag = std::abs(z);
    out.window_inf = std::min(out.window_inf, mag);
    out.window_sup = std::max(out.window_sup, mag);
    if (std::abs(z.imag()) > imag_tol) any_imag = true;
    if (!(z.real() > 0.0)) all_pos = false;
    if (!(z.real() < 0.0)) all_neg = false;
  }
  if (any_imag)
    out.sign = SymbolSign::complex_valued;
  else if (all_pos)
    out.sign = SymbolSign::positive;
  else if (all_neg)
    out.sign = SymbolSign::negative;
  else
    out.sign = SymbolSign::mixed;
  out.semi_normalized_on_window = out.window_inf > 0.0;
  return out;
}

HsPartialSum hs_partial_sum(const MatrixSpec& spec, std::size_t n) {
  HsPartialSum out;
  const DenseMatrix e = materialize_matrix(spec, n);
  double acc = 0.0;
  for (const Complex& z : e.entries()) acc += std::norm(z);
  out.partial = acc;

  if (const auto* diag = std::get_if<MatrixSpec::Diagonal>(&spec.node())) {
    if (const auto* rule = std::get_if<ScalarRule::InversePower>(&diag->rule.node())) {
      const double p = rule->exponent;
      if (p > 0.5)
        out.tail_bound = std::pow(static_cast<double>(n), 1.0 - 2.0 * p) / (2.0 * p - 1.0);
    }
  }
  return out;
}

}  // namespace eframe
