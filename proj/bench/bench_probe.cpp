// Serial vs OpenMP trial-level parallelism on the cyclicity probe and the
// fixed-space report over random commuting families.

#include <benchmark/benchmark.h>

#include "latfix/cyclicity.hpp"
#include "latfix/fixlattice.hpp"
#include "latfix/parallel.hpp"

namespace {

using namespace latfix;

void probe(benchmark::State& state, Execution mode) {
  const auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const ProbeSummary s = probe_random_contractions(trials, 6, 42, mode);
    benchmark::DoNotOptimize(s.violations);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void reports(benchmark::State& state, Execution mode) {
  const auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const auto verdicts = run_trials<int>(
        trials,
        [](std::size_t i) {
          Rng rng(trial_seed(7, i));
          const QMatrix t = random_positive_contraction(rng, static_cast<std::size_t>(uniform_int(rng, 1, 6)));
          const FixedSpaceReport r = fixed_space_report(OperatorFamily({PositiveMatrixOperator(t)}));
          return r.theorem_conformant() ? 1 : 0;
        },
        mode);
    benchmark::DoNotOptimize(verdicts.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK_CAPTURE(probe, serial, Execution::Serial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(probe, parallel, Execution::Parallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(reports, serial, Execution::Serial)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(reports, parallel, Execution::Parallel)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
