#include <benchmark/benchmark.h>

#include "phimod/batch.hpp"

using namespace phimod;

namespace {

const std::vector<PhiModule>& instances() {
  static const std::vector<PhiModule> modules = [] {
    GeneratorConfig cfg;
    cfg.seed = 42;
    return generate_batch(cfg, 512, 0, Execution::Serial);
  }();
  return modules;
}

void BM_CheckWa(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::Parallel : Execution::Serial;
  const auto& modules = instances();
  for (auto _ : state) benchmark::DoNotOptimize(check_wa_batch(modules, Reading::Corrected, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(modules.size()));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_CheckWa)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state) {
  GeneratorConfig cfg;
  cfg.target = state.range(0) ? Target::Admissible : Target::Any;
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate_indexed(cfg, i++));
}
BENCHMARK(BM_Generate)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
