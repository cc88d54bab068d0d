#include <benchmark/benchmark.h>

#include <random>

#include "stpg/stp.hpp"

namespace {

stpg::RealMatrix random_matrix(std::mt19937_64& rng, Eigen::Index r,
                               Eigen::Index c) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  stpg::RealMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

void stp_mismatched(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = state.range(0);
  const stpg::RealMatrix a = random_matrix(rng, n, 2 * n);
  const stpg::RealMatrix b = random_matrix(rng, 3 * n, n);
  for (auto _ : state) benchmark::DoNotOptimize(stpg::stp(a, b));
}

void stp_row_times_column(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = state.range(0);
  const stpg::RealMatrix v = random_matrix(rng, 1, n * n);
  const stpg::RealMatrix p = random_matrix(rng, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(stpg::stp(v, p));
}

void kron_square(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto n = state.range(0);
  const stpg::RealMatrix a = random_matrix(rng, n, n);
  const stpg::RealMatrix b = random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(stpg::kron(a, b));
}

void khatri_rao_columns(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto n = state.range(0);
  const stpg::RealMatrix a = random_matrix(rng, n, 64);
  const stpg::RealMatrix b = random_matrix(rng, n, 64);
  for (auto _ : state) benchmark::DoNotOptimize(stpg::khatri_rao(a, b));
}

void swap_application(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto n = state.range(0);
  const stpg::RealMatrix w = stpg::swap_matrix(static_cast<int>(n),
                                               static_cast<int>(n))
                                 .dense();
  const stpg::RealMatrix v = random_matrix(rng, 1, n * n * 4);
  for (auto _ : state) benchmark::DoNotOptimize(stpg::stp(v, w));
}

}  // namespace

BENCHMARK(stp_mismatched)->Range(2, 32);
BENCHMARK(stp_row_times_column)->Range(4, 64);
BENCHMARK(kron_square)->Range(4, 32);
BENCHMARK(khatri_rao_columns)->Range(4, 64);
BENCHMARK(swap_application)->Range(2, 16);

BENCHMARK_MAIN();
