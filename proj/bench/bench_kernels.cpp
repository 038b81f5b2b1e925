// Serial vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare.

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "mtp/parallel.hpp"
#include "mtp/parser.hpp"
#include "mtp/prover.hpp"

namespace {

mtp::ProblemSpec load(const std::string& id) {
  std::ifstream in(std::string(MTP_FIXTURE_DIR) + "/" + id + ".mtp");
  std::stringstream s;
  s << in.rdbuf();
  return mtp::parse_problem(s.str());
}

std::vector<mtp::Rational> grid(int n) {
  std::vector<mtp::Rational> xs;
  for (int k = 1; k <= n; ++k) xs.emplace_back(mtp::Rational(157 * k, 100 * (n + 1)));
  return xs;
}

template <bool Parallel>
void BM_EvalGrid(benchmark::State& state) {
  const auto f = load("a3").f;
  const auto xs = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto v = Parallel ? mtp::eval_grid_parallel(f, xs, 30) : mtp::eval_grid_serial(f, xs, 30);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

// Candidate i succeeds only for the last one, so every attempt runs.
template <bool Parallel>
void BM_FirstSuccess(benchmark::State& state) {
  const auto problem = load("a2");
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  auto attempt = [&](std::size_t i) {
    const mtp::IndexAssignment idx(8, 3);
    return std::holds_alternative<mtp::ProofCertificate>(mtp::replay(problem, idx)) && i + 1 == n;
  };
  for (auto _ : state) {
    auto hit = Parallel ? mtp::first_success_parallel(n, attempt) : mtp::first_success_serial(n, attempt);
    benchmark::DoNotOptimize(hit);
  }
}

template <bool Parallel>
void BM_Prove(benchmark::State& state) {
  const auto problem = load("a3");
  mtp::ProverConfig config;
  config.parallel = Parallel;
  for (auto _ : state) {
    auto r = mtp::prove(problem, config);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_EvalGrid<false>)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvalGrid<true>)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FirstSuccess<false>)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FirstSuccess<true>)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Prove<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Prove<true>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
