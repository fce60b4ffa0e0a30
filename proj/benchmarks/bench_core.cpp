#include <benchmark/benchmark.h>

#include "eframe/etransform.hpp"
#include "eframe/linalg.hpp"
#include "eframe/model.hpp"
#include "eframe/multipliers.hpp"
#include "eframe/rng.hpp"
#include "eframe/verify.hpp"

namespace {

using namespace eframe;

void BM_Matmul(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  const DenseMatrix a = rng.matrix(n, n);
  const DenseMatrix b = rng.matrix(n, n);
  for (auto _ : state) {
    DenseMatrix c = matmul(a, b);
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Matmul)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_HermitianEigensystem(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(11);
  const DenseMatrix r = rng.matrix(n, n);
  const DenseMatrix h = r + adjoint(r);
  for (auto _ : state) {
    HermitianEigensystem eig = hermitian_eigensystem(h);
    benchmark::DoNotOptimize(eig);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HermitianEigensystem)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_Invert(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(13);
  const DenseMatrix a = rng.well_conditioned(n, 0.5);
  for (auto _ : state) {
    DenseMatrix inv = invert(a);
    benchmark::DoNotOptimize(inv);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Invert)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_MultiplierMatrix(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(17);
  std::vector<DenseVector> psis, phis;
  for (std::size_t k = 0; k < n; ++k) {
    psis.push_back(rng.vector(n));
    phis.push_back(rng.vector(n));
  }
  const std::vector<Complex> symbol = rng.semi_normalized_symbol(n);
  for (auto _ : state) {
    DenseMatrix m = multiplier_matrix(symbol, psis, phis);
    benchmark::DoNotOptimize(m);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MultiplierMatrix)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_VerifySuite(benchmark::State& state) {
  TruncationConfig cfg;
  cfg.ambient_dim = cfg.seq_len = 12;
  for (auto _ : state) {
    auto report = verify::run_suite("thm-synthesis", cfg);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifySuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
