#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "eframe/types.hpp"

namespace eframe {

/// Finite-model parameters standing in for every infinite object: sequences
/// keep their first seq_len terms, matrices their leading seq_len x seq_len
/// block, and the ambient space is C^ambient_dim.
struct TruncationConfig {
  std::size_t ambient_dim = 8;
  std::size_t seq_len = 8;
  double residual_tol = 1e-9;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

/// Closed family of scalar rules k -> m_k, indexed from k = 1.
class ScalarRule {
 public:
  struct Constant {
    Complex value;
  };
  struct Power {
    double exponent;  // k^exponent
  };
  struct InversePower {
    double exponent;  // k^-exponent
  };
  struct Explicit {
    std::vector<Complex> values;
  };
  struct PrefixThenRule {
    std::vector<Complex> prefix;
    std::shared_ptr<const ScalarRule> tail;
    std::size_t tail_offset = 0;  // tail evaluated at k - tail_offset
  };
  using Node = std::variant<Constant, Power, InversePower, Explicit, PrefixThenRule>;

  static ScalarRule constant(Complex value);
  static ScalarRule power(double exponent);
  static ScalarRule inverse_power(double exponent);
  static ScalarRule explicit_values(std::vector<Complex> values);
  static ScalarRule prefix_then_rule(std::vector<Complex> prefix, ScalarRule tail,
                                     std::size_t tail_offset = 0);

  /// Value at the 1-based term index k.
  Complex eval(std::size_t k) const;
  /// Values at k = 1..count.
  std::vector<Complex> evaluate(std::size_t count) const;

  const Node& node() const noexcept { return node_; }

 private:
  explicit ScalarRule(Node node) : node_(std::move(node)) {}
  Node node_;
};

enum class TailBehavior { decaying, semi_normalized, growing, finite_support };

/// A scalar symbol m = {m_k} together with its declared infinite-tail class.
/// The declaration is carried metadata; every computed quantity uses only the
/// truncation window.
struct ScalarSequence {
  ScalarRule rule = ScalarRule::constant(Complex{1.0, 0.0});
  TailBehavior declared_tail = TailBehavior::semi_normalized;
};

/// Declarative description of an infinite matrix, materializable at any size.
class MatrixSpec {
 public:
  struct Dense {
    DenseMatrix entries;
  };
  struct Diagonal {
    ScalarRule rule;
  };
  struct Banded {
    // offset (col - row) -> rule evaluated at the 1-based row index
    std::map<long, ScalarRule> bands;
  };
  struct DensePrefixPlusDiagonalRule {
    DenseMatrix prefix;  // square leading block
    ScalarRule rule;     // diagonal entries beyond the prefix
  };
  using Node = std::variant<Dense, Diagonal, Banded, DensePrefixPlusDiagonalRule>;

  static MatrixSpec dense(DenseMatrix entries);
  static MatrixSpec diagonal(ScalarRule rule);
  static MatrixSpec banded(std::map<long, ScalarRule> bands);
  static MatrixSpec dense_prefix_plus_diagonal_rule(DenseMatrix prefix, ScalarRule rule);

  bool is_diagonal() const noexcept;
  const Node& node() const noexcept { return node_; }

 private:
  explicit MatrixSpec(Node node) : node_(std::move(node)) {}
  Node node_;
};

/// Declarative description of a truncatable sequence of vectors in C^d.
class VectorSequence {
 public:
  struct ScaledBasis {
    ScalarRule rule;  // psi_k = rule(k) e_k
  };
  struct Explicit {
    std::vector<DenseVector> vectors;
  };
  struct PrefixThenScaledBasis {
    std::vector<DenseVector> prefix;
    ScalarRule tail;
    std::size_t tail_offset = 0;  // tail evaluated at k - tail_offset
  };
  struct Transformed {
    DenseMatrix u;  // psi_k = U base_k
    std::shared_ptr<const VectorSequence> base;
  };
  using Node = std::variant<ScaledBasis, Explicit, PrefixThenScaledBasis, Transformed>;

  static VectorSequence scaled_basis(ScalarRule rule);
  static VectorSequence explicit_vectors(std::vector<DenseVector> vectors);
  static VectorSequence prefix_then_scaled_basis(std::vector<DenseVector> prefix, ScalarRule tail,
                                                 std::size_t tail_offset = 0);
  static VectorSequence transformed(DenseMatrix u, VectorSequence base);

  const Node& node() const noexcept { return node_; }

 private:
  explicit VectorSequence(Node node) : node_(std::move(node)) {}
  Node node_;
};

/// N x N truncation of the spec. Entries outside the declared structure are
/// zero; dense data shorter than N is an error.
DenseMatrix materialize_matrix(const MatrixSpec& spec, std::size_t n);

/// First `count` terms embedded in C^dim. Basis directions beyond dim
/// truncate to the zero vector; explicit vectors are zero-padded, and must
/// not carry nonzero entries beyond dim.
std::vector<DenseVector> materialize_sequence(const VectorSequence& seq, std::size_t count,
                                              std::size_t dim);

enum class SymbolSign { positive, negative, mixed, complex_valued };

struct SymbolClassification {
  double window_inf = 0.0;  // inf |m_k| over the window
  double window_sup = 0.0;  // sup |m_k| over the window
  SymbolSign sign = SymbolSign::mixed;
  bool semi_normalized_on_window = false;
};

SymbolClassification classify_symbol(const ScalarSequence& m, std::size_t count);

struct HsPartialSum {
  double partial = 0.0;  // sum_{n,k <= N} |E_{n,k}|^2
  // Integral tail bound sum_{n>N} n^{-2p} <= N^{1-2p}/(2p-1); present only
  // for diagonal inverse-power rules with p > 1/2.
  std::optional<double> tail_bound;
};

HsPartialSum hs_partial_sum(const MatrixSpec& spec, std::size_t n);

}  // namespace eframe
