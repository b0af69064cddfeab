#include <benchmark/benchmark.h>

#include "qvariant/verify.hpp"

using namespace qvariant;

namespace {

VerifyConfig cfg(bool parallel, int draws) {
  VerifyConfig c;
  c.N = 10;
  c.draws = draws;
  c.parallel = parallel;
  return c;
}

void run(benchmark::State& state, const char* target, bool parallel) {
  auto c = cfg(parallel, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = run_verify(target, c);
    benchmark::DoNotOptimize(r.passed);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_conj3_serial(benchmark::State& s) { run(s, "conj3", false); }
void BM_conj3_parallel(benchmark::State& s) { run(s, "conj3", true); }
void BM_thm3_serial(benchmark::State& s) { run(s, "thm3", false); }
void BM_thm3_parallel(benchmark::State& s) { run(s, "thm3", true); }

}  // namespace

BENCHMARK(BM_conj3_serial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_conj3_parallel)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_thm3_serial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_thm3_parallel)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
