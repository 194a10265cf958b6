// Serial reference kernels against their OpenMP counterparts. Thread count
// follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "mhc/cochain.hpp"
#include "mhc/cocyclic.hpp"
#include "mhc/kernels.hpp"
#include "mhc/matrix.hpp"

using namespace mhc;

namespace {

const char* const kGroups[] = {"Z4", "S3", "Q8"};

GroupPtr group_arg(const benchmark::State& state) { return build_group(kGroups[state.range(0)]); }

Character sign_like(const GroupPtr& g) { return enumerate_characters(g).back(); }

void label(benchmark::State& state) {
  state.SetLabel(std::string(kGroups[state.range(0)]) + " n=" + std::to_string(state.range(1)));
}

void BM_CoboundaryAssembly_Serial(benchmark::State& state) {
  const auto g = group_arg(state);
  const auto sigma = sign_like(g);
  for (auto _ : state) benchmark::DoNotOptimize(serial::coboundary_matrix(g, sigma, state.range(1)));
  label(state);
}

void BM_CoboundaryAssembly_Parallel(benchmark::State& state) {
  const auto g = group_arg(state);
  const auto sigma = sign_like(g);
  for (auto _ : state) benchmark::DoNotOptimize(coboundary_rows(*g, sigma, state.range(1)));
  label(state);
}

void BM_Rank_SerialDense(benchmark::State& state) {
  const auto g = group_arg(state);
  const ScalarMatrix m = serial::coboundary_matrix(g, sign_like(g), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(serial::rank(m));
  label(state);
}

void BM_Rank_ParallelSparse(benchmark::State& state) {
  const auto g = group_arg(state);
  const auto sigma = sign_like(g);
  const auto rows = coboundary_rows(*g, sigma, state.range(1));
  const std::size_t cols = TupleIndexer(g->order(), state.range(1)).size();
  for (auto _ : state) benchmark::DoNotOptimize(rank(rows, cols));
  label(state);
}

void BM_Cocyclic_Serial(benchmark::State& state) {
  const auto g = group_arg(state);
  const auto sigma = sign_like(g);
  for (auto _ : state) benchmark::DoNotOptimize(serial::verify_cocyclic_identities(g, sigma, state.range(1)));
  label(state);
}

void BM_Cocyclic_Parallel(benchmark::State& state) {
  const auto g = group_arg(state);
  const auto sigma = sign_like(g);
  for (auto _ : state) benchmark::DoNotOptimize(verify_cocyclic_identities(g, sigma, state.range(1)));
  label(state);
}

void small_args(benchmark::internal::Benchmark* b) {
  for (int g = 0; g < 3; ++g) b->Args({g, 2});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_CoboundaryAssembly_Serial)->Apply(small_args);
BENCHMARK(BM_CoboundaryAssembly_Parallel)->Apply(small_args);
BENCHMARK(BM_Rank_SerialDense)->Apply(small_args);
BENCHMARK(BM_Rank_ParallelSparse)->Apply(small_args);
BENCHMARK(BM_Cocyclic_Serial)->Apply(small_args);
BENCHMARK(BM_Cocyclic_Parallel)->Apply(small_args);
BENCHMARK_MAIN();
