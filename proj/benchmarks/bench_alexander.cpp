#include <benchmark/benchmark.h>

#include "ttk/braid.hpp"
#include "ttk/closed_form.hpp"
#include "ttk/fox.hpp"
#include "ttk/table.hpp"

namespace {

// T(p, p-1; p/2, 3): one knot per p.
ttk::TtkParams knot_for(std::int64_t p) { return ttk::validate(p, p - 1, p / 2, 3); }

void BM_ClosedForm(benchmark::State& state) {
  const auto k = knot_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ttk::alexander_closed_form(k));
}
BENCHMARK(BM_ClosedForm)->Arg(8)->Arg(16)->Arg(32);

void BM_Fox(benchmark::State& state) {
  const auto k = knot_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ttk::alexander_from_presentation(k));
}
BENCHMARK(BM_Fox)->Arg(8)->Arg(16)->Arg(32);

void BM_Burau(benchmark::State& state) {
  const auto k = knot_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ttk::alexander_from_braid(k));
}
BENCHMARK(BM_Burau)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Table(benchmark::State& state) {
  const auto params = ttk::enumerate_ttk(state.range(0), 1, 5);
  ttk::TableOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(ttk::tabulate(params, opts));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * params.size()));
}
BENCHMARK(BM_Table)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
