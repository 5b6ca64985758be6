#include <benchmark/benchmark.h>

#include "injwords/complex.hpp"
#include "injwords/eulerian.hpp"
#include "injwords/modular.hpp"
#include "injwords/regular.hpp"
#include "injwords/shuffle.hpp"
#include "injwords/spectra.hpp"

using namespace injwords;

static void BM_GroupAlgebraProduct(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto& e = eulerian_idempotents(r);
  for (auto _ : state) benchmark::DoNotOptimize(e[0] * e[1]);
}
BENCHMARK(BM_GroupAlgebraProduct)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_ModularRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = modp::reduce_dense(boundary_matrix(n, n), modp::prime(0));
  for (auto _ : state) benchmark::DoNotOptimize(modp::rank(m));
}
BENCHMARK(BM_ModularRank)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_ExactRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = boundary_matrix(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_ExactRank)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_LaplacianBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(laplacian(n, n / 2));
}
BENCHMARK(BM_LaplacianBuild)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_SpectrumCertificate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = laplacian(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(integer_spectrum_certificate(m, true));
}
BENCHMARK(BM_SpectrumCertificate)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_RegularShuffleCertificate(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto m = left_multiplication_matrix(random_to_random(r));
  for (auto _ : state) benchmark::DoNotOptimize(integer_spectrum_certificate(m, true));
}
BENCHMARK(BM_RegularShuffleCertificate)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
