// Acceptance suite: one criterion per numbered check, one pass/fail line
// each, nonzero exit when any fails. Run via ctest or directly.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "eframe/errors.hpp"
#include "eframe/etransform.hpp"
#include "eframe/json_io.hpp"
#include "eframe/linalg.hpp"
#include "eframe/multipliers.hpp"
#include "eframe/rng.hpp"
#include "eframe/verify.hpp"

using namespace eframe;

namespace {

int failures = 0;

void report(int number, bool pass, const std::string& title, const std::string& detail) {
  std::printf("[%2d] %s  %s (%s)\n", number, pass ? "PASS" : "FAIL", title.c_str(),
              detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixture(const char* name) { return std::string(EFRAME_FIXTURES_DIR "/") + name; }

TruncationConfig config(std::size_t n) {
  TruncationConfig cfg;
  cfg.ambient_dim = cfg.seq_len = n;
  return cfg;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return std::string(buf);
}

// 1. The shipped first-example fixture transforms onto the standard basis.
void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const io::SpecFile file = io::load_spec_file(fixture("paper_example_1.json"));
  const auto terms = e_transform(*file.e, *file.psi, 8, 8).terms;
  double dev = 0.0;
  for (std::size_t n = 0; n < 8; ++n)
    dev = std::max(dev, max_abs(terms[n] - DenseVector::basis(n, 8)));
  const double elapsed = seconds_since(start);
  report(1, dev <= 1e-12 && elapsed < 0.1, "paper example 1: transform is the standard basis",
         fmt("max dev %.2e, %.3f s", dev, elapsed));
}

// 2. Its multiplier at c = 2 is diag(2,2,2,1,1/2,...) and equals the frame
// operator of the scaled transformed system.
void criterion_2() {
  const io::SpecFile file = io::load_spec_file(fixture("paper_example_1.json"));
  const MultiplierSpec spec{*file.symbol, *file.psi, *file.psi, *file.e, *file.e, config(8)};
  const DenseMatrix m = multiplier_matrix(spec);

  DenseMatrix expected(8, 8);
  const double diag[] = {2, 2, 2, 1, 1.0 / 2, 1.0 / 3, 1.0 / 4, 1.0 / 5};
  for (std::size_t k = 0; k < 8; ++k) expected(k, k) = Complex{diag[k], 0.0};
  const double dev_diag = max_abs(m - expected);

  const auto psis = materialize_sequence(*file.psi, 8, 8);
  const std::vector<Complex> mvals = file.symbol->rule.evaluate(8);
  std::vector<DenseVector> scaled = psis;
  for (std::size_t k = 0; k < 8; ++k)
    scaled[k] = Complex{std::sqrt(std::abs(mvals[k])), 0.0} * scaled[k];
  const DenseMatrix s = e_frame_operator(*file.e, VectorSequence::explicit_vectors(scaled), 8, 8);
  const double dev_s = max_abs(m - s);

  report(2, dev_diag <= 1e-10 && dev_s <= 1e-10,
         "paper example 1: multiplier diagonal and M = S",
         fmt("diag dev %.2e, M-S dev %.2e", dev_diag, dev_s));
}

// 3. The final example's multiplier at d = 4 is diag(1/n) and agrees with the
// plain multiplier carrying the symbol 1/n^4.
void criterion_3() {
  const io::SpecFile file = io::load_spec_file(fixture("paper_example_2.json"));
  const MultiplierSpec spec{*file.symbol, *file.psi, *file.phi, *file.e, *file.e, config(4)};
  const DenseMatrix m = multiplier_matrix(spec);

  DenseMatrix expected(4, 4);
  for (std::size_t k = 0; k < 4; ++k) expected(k, k) = Complex{1.0 / (k + 1.0), 0.0};
  const double dev_diag = max_abs(m - expected);

  const auto psis = materialize_sequence(*file.psi, 4, 4);
  const auto phis = materialize_sequence(*file.phi, 4, 4);
  const DiagonalReduction red = diagonal_reduction(*file.symbol, psis, phis, *file.e, 4);

  report(3, dev_diag <= 1e-12 && red.residual <= 1e-12,
         "paper example 2: diag(1/n) and the 1/n^4 reduction",
         fmt("diag dev %.2e, reduction dev %.2e", dev_diag, red.residual));
}

// 4. Both factorization identities over 100 seeded cases at d = N = 12.
void criterion_4() {
  const auto start = std::chrono::steady_clock::now();
  const auto synth = verify::run_suite("thm-synthesis", config(12));
  const auto anal = verify::run_suite("thm-analysis", config(12));
  const double elapsed = seconds_since(start);
  const double worst = std::max(synth.max_residual, anal.max_residual);
  report(4,
         synth.all_pass && anal.all_pass && worst <= 1e-9 && synth.cases.size() == 100 &&
             anal.cases.size() == 100 && elapsed < 2.0,
         "factorization identities on 100 seeded cases each",
         fmt("max residual %.2e, %.3f s", worst, elapsed));
}

// 5. Norm bound holds on 100 seeded pairs.
void criterion_5() {
  const auto rep = verify::run_suite("multiplier-bound", config(12));
  report(5, rep.all_pass && rep.cases.size() == 100,
         "norm bounded by sqrt(B B') sup|m| on 100 seeded cases",
         fmt("max excess %.2e", rep.max_residual));
}

// 6. Inverse formulas against direct inversion, both signs, 50 seeded cases.
void criterion_6() {
  const auto rep = verify::run_suite("multiplier-inverse", config(12));
  std::size_t pos = 0, neg = 0;
  for (const auto& c : rep.cases) {
    if (c.case_id.find("/pos") != std::string::npos) ++pos;
    if (c.case_id.find("/neg") != std::string::npos) ++neg;
  }
  report(6, rep.all_pass && pos == 100 && neg == 100,
         "inverse formulas on 50 seeded cases, both signs and variants",
         fmt("max rel residual %.2e", rep.max_residual));
}

// 7. Dual-identity and dual-E-frame multipliers are the identity.
void criterion_7() {
  const auto dual = verify::run_suite("dual-identity", config(12));
  const auto eframe_dual = verify::run_suite("dual-eframe", config(12));
  report(7,
         dual.all_pass && eframe_dual.all_pass && dual.cases.size() == 200 &&
             eframe_dual.cases.size() == 100 &&
             std::max(dual.max_residual, eframe_dual.max_residual) <= 1e-9,
         "dual multipliers equal the identity on 50 seeded cases each",
         fmt("max ||M - I|| %.2e", std::max(dual.max_residual, eframe_dual.max_residual)));
}

// 8. Hilbert-Schmidt diagnostic at N = 100 against the frozen reference.
void criterion_8() {
  const HsPartialSum hs =
      hs_partial_sum(MatrixSpec::diagonal(ScalarRule::inverse_power(2.0)), 100);
  const bool in_window =
      hs.partial >= 1.08232 - 1e-5 && hs.partial <= 1.08232 + 3.4e-7 + 1e-5;
  // Reference 1.0823229053444732 computed with an independent high-precision
  // summation before the implementation existed.
  const bool matches_oracle = std::abs(hs.partial - 1.0823229053444732) <= 1e-12;
  const bool tail_ok = hs.tail_bound.has_value() && *hs.tail_bound <= 3.4e-7;
  report(8, in_window && matches_oracle && tail_ok, "HS partial sum of diag(1/n^2) at N = 100",
         fmt("partial %.12f, tail bound %.3e", hs.partial, hs.tail_bound.value_or(-1.0)));
}

// 9. Cross-cutting invariants on 100 seeded cases each.
void criterion_9() {
  double agree = 0.0, linear = 0.0, exchange = 0.0, termwise = 0.0;
  for (std::size_t trial = 0; trial < 100; ++trial) {
    Rng rng(derive_case_seed(0, "acceptance-invariants", trial));
    const std::size_t n = 10, d = 8;
    std::vector<DenseVector> epsi, ephi;
    for (std::size_t k = 0; k < n; ++k) {
      epsi.push_back(rng.vector(d));
      ephi.push_back(rng.vector(d));
    }
    std::vector<Complex> ma(n), mb(n);
    for (std::size_t k = 0; k < n; ++k) {
      ma[k] = 2.0 * rng.unit_box();
      mb[k] = 2.0 * rng.unit_box();
    }

    // definition vs factorization
    const DenseMatrix m = multiplier_matrix(ma, epsi, ephi);
    const DenseVector f = rng.vector(d);
    agree = std::max(agree, norm2(multiplier_apply(ma, epsi, ephi, f) - matvec(m, f)));

    // symbol linearity
    const Complex alpha = rng.unit_box(), beta = rng.unit_box();
    std::vector<Complex> combo(n);
    for (std::size_t k = 0; k < n; ++k) combo[k] = alpha * ma[k] + beta * mb[k];
    linear = std::max(linear,
                      max_abs(multiplier_matrix(combo, epsi, ephi) -
                              (alpha * m + beta * multiplier_matrix(mb, epsi, ephi))));

    // exchange symmetry
    std::vector<Complex> conj_ma(n);
    for (std::size_t k = 0; k < n; ++k) conj_ma[k] = std::conj(ma[k]);
    exchange = std::max(exchange,
                        max_abs(adjoint(m) - multiplier_matrix(conj_ma, ephi, epsi)));

    // commutation implies termwise symbol extraction (diagonal matrix)
    const DenseMatrix en = materialize_matrix(
        MatrixSpec::diagonal(
            ScalarRule::explicit_values(rng.semi_normalized_symbol(n, 0.5, 2.0, +1, true))),
        n);
    std::vector<DenseVector> scaled = epsi;
    for (std::size_t k = 0; k < n; ++k) scaled[k] = ma[k] * scaled[k];
    const auto lhs = e_transform_terms(en, scaled);
    const auto rhs = e_transform_terms(en, epsi);
    for (std::size_t k = 0; k < n; ++k)
      termwise = std::max(termwise, max_abs(lhs[k] - ma[k] * rhs[k]));
  }
  report(9,
         agree <= 1e-10 && linear <= 1e-12 && exchange <= 1e-10 && termwise <= 1e-12,
         "agreement, linearity, exchange and termwise invariants (100 cases each)",
         fmt("worst: agree %.2e, exchange %.2e", std::max(agree, linear),
             std::max(exchange, termwise)));
}

// 10. The whole verification battery at seed 0 stays green and fast.
void criterion_10() {
  const auto start = std::chrono::steady_clock::now();
  const auto reports = verify::run_all_suites(config(12));
  const double elapsed = seconds_since(start);
  bool all_pass = true;
  for (const auto& rep : reports) all_pass = all_pass && rep.all_pass;
  report(10, all_pass && reports.size() == 14 && elapsed < 10.0,
         "verify all at seed 0, d = N = 12", fmt("14 suites in %.3f s", elapsed));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
