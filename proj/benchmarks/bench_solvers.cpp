#include <benchmark/benchmark.h>

#include <random>

#include "stpg/bayes_potential.hpp"
#include "stpg/conversions.hpp"
#include "stpg/dynamics.hpp"
#include "stpg/potential.hpp"

namespace {

stpg::NormalGame random_game(std::mt19937_64& rng, std::vector<int> cards) {
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  const stpg::ProfileSpace sp{cards};
  std::vector<stpg::PayoffRow> rows(
      cards.size(), stpg::PayoffRow(static_cast<std::size_t>(sp.total())));
  for (auto& row : rows)
    for (auto& v : row) v = dist(rng);
  return stpg::NormalGame(std::move(cards), std::move(rows));
}

stpg::BayesianGame random_bayesian(std::mt19937_64& rng, int types,
                                   int actions) {
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  const stpg::ProfileSpace tspace({types, types});
  const stpg::ProfileSpace aspace({actions, actions});
  std::vector<std::vector<std::optional<double>>> tables(
      2, std::vector<std::optional<double>>(
             static_cast<std::size_t>(tspace.total() * aspace.total())));
  for (auto& t : tables)
    for (auto& v : t) v = dist(rng);
  stpg::RealVector prior =
      stpg::RealVector::Constant(tspace.total(), 1.0 / tspace.total());
  std::vector<int> all;
  for (int a = 1; a <= actions; ++a) all.push_back(a);
  std::vector<std::vector<std::vector<int>>> adm(
      2, std::vector<std::vector<int>>(static_cast<std::size_t>(types), all));
  return stpg::assemble({types, types}, {actions, actions}, adm, tables,
                        std::move(prior));
}

void solve_potential_equation(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const int k = static_cast<int>(state.range(0));
  const stpg::NormalGame g = random_game(rng, {k, k, k});
  for (auto _ : state) benchmark::DoNotOptimize(stpg::solve_potential(g));
}

void at_potential_test(benchmark::State& state) {
  std::mt19937_64 rng(12);
  const stpg::BayesianGame g =
      random_bayesian(rng, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(stpg::at_potential(g));
}

void harsanyi_conversion(benchmark::State& state) {
  std::mt19937_64 rng(13);
  const stpg::BayesianGame g =
      random_bayesian(rng, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(stpg::harsanyi_convert(g));
}

void logit_chain_build(benchmark::State& state) {
  std::mt19937_64 rng(14);
  const stpg::BayesianGame g =
      random_bayesian(rng, 2, static_cast<int>(state.range(0)));
  const stpg::ConvertedGame cg = stpg::selten_convert(g, {1, 1});
  stpg::SurConfig cfg;
  cfg.rule = stpg::UpdateRule::Logit;
  cfg.lambda = 1.5;
  cfg.schedule = stpg::Schedule::AsyncUniform;
  for (auto _ : state)
    benchmark::DoNotOptimize(stpg::logit_matrix(cg, cfg));
}

void power_iteration(benchmark::State& state) {
  std::mt19937_64 rng(15);
  const Eigen::Index n = state.range(0);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  stpg::RealMatrix m(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    double sum = 0.0;
    for (Eigen::Index r = 0; r < n; ++r) {
      m(r, c) = dist(rng) + 1e-3;
      sum += m(r, c);
    }
    m.col(c) /= sum;
  }
  const stpg::TransitionMatrix chain(m);
  for (auto _ : state)
    benchmark::DoNotOptimize(stpg::stationary_distribution(chain));
}

}  // namespace

BENCHMARK(solve_potential_equation)->DenseRange(2, 5);
BENCHMARK(at_potential_test)->DenseRange(2, 4);
BENCHMARK(harsanyi_conversion)->DenseRange(2, 6);
BENCHMARK(logit_chain_build)->DenseRange(2, 5);
BENCHMARK(power_iteration)->Range(8, 256);
