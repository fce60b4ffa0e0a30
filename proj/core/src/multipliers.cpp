#include "eframe/multipliers.hpp"

#include <algorithm>
#include <cmath>

#include "eframe/errors.hpp"
#include "eframe/linalg.hpp"

namespace eframe {

namespace {

std::vector<DenseVector> scale_terms(const std::vector<DenseVector>& terms,
                                     const std::vector<double>& factors) {
  std::vector<DenseVector> out = terms;
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = Complex{factors[k], 0.0} * out[k];
  return out;
}

std::vector<double> sqrt_abs(const std::vector<Complex>& values) {
  std::vector<double> out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) out[k] = std::sqrt(std::abs(values[k]));
  return out;
}

DenseMatrix diagonal_of(std::span<const Complex> values) {
  DenseMatrix d(values.size(), values.size());
  for (std::size_t k = 0; k < values.size(); ++k) d(k, k) = values[k];
  return d;
}

/// max-norm deviation of sum_n psi_n phi_n* from the identity.
double duality_residual(const std::vector<DenseVector>& psis,
                        const std::vector<DenseVector>& phis) {
  if (psis.size() != phis.size())
    throw DimensionError("duality check: sequences of different length");
  if (psis.empty()) throw DimensionError("duality check: empty sequences");
  const std::size_t dim = psis.front().dim();
  DenseMatrix d(dim, dim);
  for (std::size_t n = 0; n < psis.size(); ++n) {
    if (phis[n].dim() != dim) throw DimensionError("duality check: mixed dimensions");
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) d(i, j) += psis[n][i] * std::conj(phis[n][j]);
  }
  return max_abs(d - DenseMatrix::identity(dim));
}

/// One-signed, real, semi-normalized on the window; returns +1 or -1.
int require_one_signed(const SymbolClassification& cls, const char* who) {
  if (cls.sign == SymbolSign::complex_valued)
    throw PreconditionError(std::string(who) + ": symbol must be real");
  if (cls.sign == SymbolSign::mixed)
    throw PreconditionError(std::string(who) + ": symbol must be one-signed");
  if (!cls.semi_normalized_on_window)
    throw PreconditionError(std::string(who) + ": symbol not semi-normalized on the window");
  return cls.sign == SymbolSign::positive ? +1 : -1;
}

}  // namespace

DenseVector multiplier_apply(std::span<const Complex> symbol,
                             const std::vector<DenseVector>& epsi,
                             const std::vector<DenseVector>& ephi, const DenseVector& f) {
  if (symbol.size() != epsi.size() || symbol.size() != ephi.size())
    throw DimensionError("multiplier_apply: term counts do not match the symbol");
  if (epsi.empty()) throw DimensionError("multiplier_apply: empty sequences");
  DenseVector out(epsi.front().dim());
  for (std::size_t n = 0; n < symbol.size(); ++n) {
    const Complex weight = symbol[n] * inner(f, ephi[n]);
    for (std::size_t i = 0; i < out.dim(); ++i) out[i] += weight * epsi[n][i];
  }
  return out;
}

DenseMatrix multiplier_matrix(std::span<const Complex> symbol,
                              const std::vector<DenseVector>& epsi,
                              const std::vector<DenseVector>& ephi) {
  if (symbol.size() != epsi.size() || symbol.size() != ephi.size())
    throw DimensionError("multiplier_matrix: term counts do not match the symbol");
  const DenseMatrix t2 = synthesis_matrix(epsi);
  const DenseMatrix t1_adj = adjoint(synthesis_matrix(ephi));
  return matmul(t2, matmul(diagonal_of(symbol), t1_adj));
}

DenseVector multiplier_apply(const MultiplierSpec& spec, const DenseVector& f) {
  spec.truncation.validate();
  if (f.dim() != spec.domain_dim())
    throw DimensionError("multiplier_apply: f does not live in the domain space");
  const std::size_t n = spec.truncation.seq_len;
  const auto epsi = e_transform(spec.e2, spec.psi, n, spec.codomain_dim()).terms;
  const auto ephi = e_transform(spec.e1, spec.phi, n, spec.domain_dim()).terms;
  return multiplier_apply(spec.symbol.rule.evaluate(n), epsi, ephi, f);
}

DenseMatrix multiplier_matrix(const MultiplierSpec& spec) {
  spec.truncation.validate();
  const std::size_t n = spec.truncation.seq_len;
  const auto epsi = e_transform(spec.e2, spec.psi, n, spec.codomain_dim()).terms;
  const auto ephi = e_transform(spec.e1, spec.phi, n, spec.domain_dim()).terms;
  return multiplier_matrix(spec.symbol.rule.evaluate(n), epsi, ephi);
}

NormBoundReport multiplier_norm_bound(const MultiplierSpec& spec) {
  const std::size_t n = spec.truncation.seq_len;
  const SymbolClassification cls = classify_symbol(spec.symbol, n);
  const double b_phi = e_frame_bounds(spec.e1, spec.phi, n, spec.domain_dim()).upper;
  const double b_psi = e_frame_bounds(spec.e2, spec.psi, n, spec.codomain_dim()).upper;

  NormBoundReport out;
  out.norm = operator_norm(multiplier_matrix(spec));
  out.bound = std::sqrt(b_phi * b_psi) * cls.window_sup;
  out.within = out.norm <= out.bound + spec.truncation.residual_tol;
  return out;
}

std::vector<CommutationViolation> check_symbol_matrix_commutation(const ScalarSequence& m,
                                                                  const MatrixSpec& e,
                                                                  std::size_t n, double tol) {
  const DenseMatrix en = materialize_matrix(e, n);
  const std::vector<Complex> values = m.rule.evaluate(n);
  std::vector<CommutationViolation> out;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double mag = std::abs(en(r, c) * (values[r] - values[c]));
      if (mag > tol) out.push_back(CommutationViolation{r + 1, c + 1, mag});
    }
  }
  return out;
}

FrameOperatorEquality multiplier_as_frame_operator(const ScalarSequence& m,
                                                   const std::vector<DenseVector>& psis,
                                                   const MatrixSpec& e,
                                                   const TruncationConfig& cfg) {
  const std::size_t n = psis.size();
  const SymbolClassification cls = classify_symbol(m, n);
  FrameOperatorEquality out;
  out.sign = require_one_signed(cls, "multiplier_as_frame_operator");
  if (!check_symbol_matrix_commutation(m, e, n).empty())
    throw PreconditionError("multiplier_as_frame_operator: symbol does not commute with E");

  const DenseMatrix en = materialize_matrix(e, n);
  const std::vector<Complex> values = m.rule.evaluate(n);
  const auto epsi = e_transform_terms(en, psis);
  const DenseMatrix mult = multiplier_matrix(values, epsi, epsi);
  const DenseMatrix s = frame_operator(e_transform_terms(en, scale_terms(psis, sqrt_abs(values))));
  out.residual = max_abs(mult - Complex{static_cast<double>(out.sign), 0.0} * s);
  (void)cfg;
  return out;
}

InverseReport multiplier_inverse(const ScalarSequence& m, const std::vector<DenseVector>& phis,
                                 const DenseMatrix& u, const MatrixSpec& e,
                                 const TruncationConfig& cfg, InverseVariant variant) {
  const std::size_t n = phis.size();
  const SymbolClassification cls = classify_symbol(m, n);
  const int sign = require_one_signed(cls, "multiplier_inverse");
  if (!check_symbol_matrix_commutation(m, e, n).empty())
    throw PreconditionError("multiplier_inverse: symbol does not commute with E");
  if (condition_number(u) > 1e4)
    throw PreconditionError("multiplier_inverse: U too ill-conditioned");

  const DenseMatrix en = materialize_matrix(e, n);
  const auto ephi = e_transform_terms(en, phis);
  if (!(frame_bounds(ephi).lower > cfg.residual_tol))
    throw PreconditionError("multiplier_inverse: Phi is not an E-frame at this truncation");

  std::vector<DenseVector> psis;
  psis.reserve(n);
  for (const DenseVector& phi : phis) psis.push_back(matvec(u, phi));
  const auto epsi = e_transform_terms(en, psis);

  const std::vector<Complex> values = m.rule.evaluate(n);
  const DenseMatrix s =
      frame_operator(e_transform_terms(en, scale_terms(phis, sqrt_abs(values))));
  const DenseMatrix s_inv = invert(s);
  const DenseMatrix u_inv = invert(u);

  InverseReport out;
  out.variant = variant;
  DenseMatrix mult;
  if (variant == InverseVariant::phi_psi) {
    // M_{m,Phi,Psi} = M_{m,Phi,Phi} U*, so the inverse is (U^-1)* S^-1.
    mult = multiplier_matrix(values, ephi, epsi);
    out.formula_inverse = matmul(adjoint(u_inv), s_inv);
  } else {
    // M_{m,Psi,Phi} = U M_{m,Phi,Phi}, so the inverse is S^-1 U^-1.
    mult = multiplier_matrix(values, epsi, ephi);
    out.formula_inverse = matmul(s_inv, u_inv);
  }
  if (sign < 0) out.formula_inverse = Complex{-1.0, 0.0} * out.formula_inverse;
  out.direct_inverse = invert(mult);
  out.residual = max_abs(out.formula_inverse - out.direct_inverse) / max_abs(out.direct_inverse);
  return out;
}

DiagonalReduction diagonal_reduction(const ScalarSequence& m,
                                     const std::vector<DenseVector>& psis,
                                     const std::vector<DenseVector>& phis, const MatrixSpec& e,
                                     std::size_t n) {
  if (!e.is_diagonal())
    throw PreconditionError("diagonal_reduction: diagonal matrix spec required");
  if (psis.size() != n || phis.size() != n)
    throw DimensionError("diagonal_reduction: sequences must hold n terms");

  const DenseMatrix en = materialize_matrix(e, n);
  const std::vector<Complex> values = m.rule.evaluate(n);
  std::vector<Complex> reduced(n);
  for (std::size_t k = 0; k < n; ++k) reduced[k] = std::norm(en(k, k)) * values[k];

  const DenseMatrix with_e =
      multiplier_matrix(values, e_transform_terms(en, psis), e_transform_terms(en, phis));
  const DenseMatrix plain = multiplier_matrix(reduced, psis, phis);

  DiagonalReduction out;
  out.reduced_symbol =
      ScalarSequence{ScalarRule::explicit_values(std::move(reduced)), m.declared_tail};
  out.residual = max_abs(with_e - plain);
  return out;
}

DualIdentityResiduals dual_identity_check(const std::vector<DenseVector>& psis,
                                          const std::vector<DenseVector>& phis,
                                          const MatrixSpec& e, const TruncationConfig& cfg) {
  if (!e.is_diagonal())
    throw PreconditionError("dual_identity_check: diagonal matrix spec required");
  if (duality_residual(psis, phis) > cfg.residual_tol)
    throw PreconditionError("dual_identity_check: sequences are not dual at this truncation");

  const std::size_t n = psis.size();
  const DenseMatrix en = materialize_matrix(e, n);
  for (std::size_t k = 0; k < n; ++k)
    if (std::abs(en(k, k)) == 0.0)
      throw PreconditionError("dual_identity_check: zero diagonal entry");
  const DenseMatrix conj_e = conjugate(en);
  const DenseMatrix inv_e = invert(en);

  const std::vector<Complex> ones(n, Complex{1.0, 0.0});
  const auto conj_psi = e_transform_terms(conj_e, psis);
  const auto conj_phi = e_transform_terms(conj_e, phis);
  const auto inv_psi = e_transform_terms(inv_e, psis);
  const auto inv_phi = e_transform_terms(inv_e, phis);

  const std::size_t dim = psis.front().dim();
  const DenseMatrix id = DenseMatrix::identity(dim);
  // Superscripts (E1, E2): analysis under E1, synthesis under E2.
  DualIdentityResiduals out;
  out.conj_inv_psi_phi = max_abs(multiplier_matrix(ones, inv_psi, conj_phi) - id);
  out.conj_inv_phi_psi = max_abs(multiplier_matrix(ones, inv_phi, conj_psi) - id);
  out.inv_conj_psi_phi = max_abs(multiplier_matrix(ones, conj_psi, inv_phi) - id);
  out.inv_conj_phi_psi = max_abs(multiplier_matrix(ones, conj_phi, inv_psi) - id);
  return out;
}

DualEFrameResiduals dual_eframe_identity(const std::vector<DenseVector>& psis,
                                         const std::vector<DenseVector>& phis, const MatrixSpec& e,
                                         const TruncationConfig& cfg) {
  if (!e.is_diagonal())
    throw PreconditionError("dual_eframe_identity: diagonal matrix spec required");
  const std::size_t n = psis.size();
  const DenseMatrix en = materialize_matrix(e, n);
  const auto epsi = e_transform_terms(en, psis);
  const auto ephi = e_transform_terms(en, phis);
  if (duality_residual(epsi, ephi) > cfg.residual_tol)
    throw PreconditionError(
        "dual_eframe_identity: transformed sequences are not dual at this truncation");

  std::vector<Complex> symbol(n);
  for (std::size_t k = 0; k < n; ++k) symbol[k] = Complex{std::norm(en(k, k)), 0.0};

  const std::size_t dim = psis.front().dim();
  const DenseMatrix id = DenseMatrix::identity(dim);
  DualEFrameResiduals out;
  out.psi_phi = max_abs(multiplier_matrix(symbol, psis, phis) - id);
  out.phi_psi = max_abs(multiplier_matrix(symbol, phis, psis) - id);
  return out;
}

}  // namespace eframe
