#pragma once

#include <span>
#include <vector>

#include "eframe/etransform.hpp"
#include "eframe/model.hpp"
#include "eframe/types.hpp"

namespace eframe {

/// Declarative multiplier M f = sum_n m_n <f, (E1 Phi)_n> (E2 Psi)_n from the
/// domain C^dim_domain into C^dim_codomain. A zero dimension falls back to
/// truncation.ambient_dim.
struct MultiplierSpec {
  ScalarSequence symbol;
  VectorSequence psi;  // synthesis side, lives in the codomain
  VectorSequence phi;  // analysis side, lives in the domain
  MatrixSpec e1;       // applied to phi
  MatrixSpec e2;       // applied to psi
  TruncationConfig truncation;
  std::size_t dim_domain = 0;
  std::size_t dim_codomain = 0;

  std::size_t domain_dim() const {
    return dim_domain == 0 ? truncation.ambient_dim : dim_domain;
  }
  std::size_t codomain_dim() const {
    return dim_codomain == 0 ? truncation.ambient_dim : dim_codomain;
  }
};

// Materialized layer: epsi = (E2 Psi)_n terms, ephi = (E1 Phi)_n terms.
// multiplier_apply sums the defining series directly; multiplier_matrix
// composes synthesis * diag(m) * analysis. Their agreement is a theorem and
// is kept as two separate code paths.
DenseVector multiplier_apply(std::span<const Complex> symbol,
                             const std::vector<DenseVector>& epsi,
                             const std::vector<DenseVector>& ephi, const DenseVector& f);
DenseMatrix multiplier_matrix(std::span<const Complex> symbol,
                              const std::vector<DenseVector>& epsi,
                              const std::vector<DenseVector>& ephi);

DenseVector multiplier_apply(const MultiplierSpec& spec, const DenseVector& f);
DenseMatrix multiplier_matrix(const MultiplierSpec& spec);

/// Operator norm against sqrt(B B') sup|m_k|, with B the upper bound of Phi
/// under E1 and B' the upper bound of Psi under E2.
struct NormBoundReport {
  double norm = 0.0;
  double bound = 0.0;
  bool within = false;
};

NormBoundReport multiplier_norm_bound(const MultiplierSpec& spec);

/// Scan of m_n E_{n,k} = E_{n,k} m_k over the window. An empty result means
/// m (E Psi) = E (m Psi) termwise for every sequence. Indices are 1-based.
struct CommutationViolation {
  std::size_t row = 0;
  std::size_t col = 0;
  double magnitude = 0.0;  // |E_{n,k} (m_n - m_k)|
};

std::vector<CommutationViolation> check_symbol_matrix_commutation(const ScalarSequence& m,
                                                                  const MatrixSpec& e,
                                                                  std::size_t n,
                                                                  double tol = 1e-12);

/// Residual of M_{m,Psi,Psi} = sign * S over the transform of {sqrt|m_k| psi_k}.
/// Requires a real, one-signed, window-semi-normalized symbol and an empty
/// commutation scan.
struct FrameOperatorEquality {
  double residual = 0.0;
  int sign = +1;
};

FrameOperatorEquality multiplier_as_frame_operator(const ScalarSequence& m,
                                                   const std::vector<DenseVector>& psis,
                                                   const MatrixSpec& e,
                                                   const TruncationConfig& cfg);

/// Which multiplier the inverse formula targets: subscripts name the
/// (synthesis, analysis) order, with Psi = U Phi throughout.
enum class InverseVariant {
  phi_psi,  // M_{m,Phi,Psi}: inverse (U^-1)* S^-1
  psi_phi,  // M_{m,Psi,Phi}: inverse S^-1 U^-1
};

struct InverseReport {
  DenseMatrix formula_inverse;
  DenseMatrix direct_inverse;
  double residual = 0.0;  // ||formula - direct||_max / ||direct||_max
  InverseVariant variant = InverseVariant::phi_psi;
};

/// Both S factors are frame operators of the transform of {sqrt|m_k| phi_k};
/// negative symbols negate the formula. Requires Phi an E-frame at this
/// truncation, cond(U) <= 1e4, a one-signed window-semi-normalized symbol,
/// and an empty commutation scan.
InverseReport multiplier_inverse(const ScalarSequence& m, const std::vector<DenseVector>& phis,
                                 const DenseMatrix& u, const MatrixSpec& e,
                                 const TruncationConfig& cfg, InverseVariant variant);

/// For diagonal E the multiplier collapses to the plain multiplier with
/// symbol m'_n = |E_{n,n}|^2 m_n.
struct DiagonalReduction {
  ScalarSequence reduced_symbol;
  double residual = 0.0;  // ||M^E_m - M_{m'}||_max
};

DiagonalReduction diagonal_reduction(const ScalarSequence& m,
                                     const std::vector<DenseVector>& psis,
                                     const std::vector<DenseVector>& phis, const MatrixSpec& e,
                                     std::size_t n);

/// ||M - I||_max for the four unit-symbol multipliers built from (conj E,
/// E^-1) and (E^-1, conj E) over a dual pair, diagonal E. Verifies the
/// duality sum_n <f, phi_n> psi_n = f on a full basis first.
struct DualIdentityResiduals {
  double conj_inv_psi_phi = 0.0;
  double conj_inv_phi_psi = 0.0;
  double inv_conj_psi_phi = 0.0;
  double inv_conj_phi_psi = 0.0;
};

DualIdentityResiduals dual_identity_check(const std::vector<DenseVector>& psis,
                                          const std::vector<DenseVector>& phis,
                                          const MatrixSpec& e, const TruncationConfig& cfg);

/// ||M - I||_max for the plain multipliers with symbol {|E_{n,n}|^2} over a
/// dual E-frame pair (duality of the transformed systems verified first).
struct DualEFrameResiduals {
  double psi_phi = 0.0;
  double phi_psi = 0.0;
};

DualEFrameResiduals dual_eframe_identity(const std::vector<DenseVector>& psis,
                                         const std::vector<DenseVector>& phis, const MatrixSpec& e,
                                         const TruncationConfig& cfg);

}  // namespace eframe
