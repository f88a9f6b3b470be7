#include <benchmark/benchmark.h>

#include "fga/constructions.hpp"
#include "fga/invariants.hpp"
#include "fga/sweep.hpp"

using namespace fga;

namespace {

// Class growth over every class of length <= 2 of theta_n.
void sweep_case(benchmark::State& state, bool serial) {
  const auto c = make_theta(static_cast<std::size_t>(state.range(0)));
  SweepOptions opts;
  opts.max_len = 2;
  const auto subjects = sweep_subjects(c.rank(), opts);
  for (auto _ : state) {
    auto r = serial ? sweep_classes_serial(c.automorphism, subjects, opts.growth)
                    : sweep_classes_parallel(c.automorphism, subjects, opts.growth);
    benchmark::DoNotOptimize(r);
  }
  state.counters["classes"] = static_cast<double>(subjects.size());
}

// Meet-in-the-middle fixed word search on alpha_n.
void fixed_case(benchmark::State& state, bool serial) {
  const auto c = make_alpha_poly(static_cast<std::size_t>(state.range(0)));
  SearchOptions opts;
  opts.serial = serial;
  for (auto _ : state) {
    auto w = fixed_words(c.automorphism, 6, opts);
    benchmark::DoNotOptimize(w);
  }
}

void BM_SweepSerial(benchmark::State& s) { sweep_case(s, true); }
void BM_SweepParallel(benchmark::State& s) { sweep_case(s, false); }
void BM_FixedSerial(benchmark::State& s) { fixed_case(s, true); }
void BM_FixedParallel(benchmark::State& s) { fixed_case(s, false); }

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
