// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "liq/catalog.hpp"
#include "liq/enumerate.hpp"
#include "liq/finite_semigroup.hpp"
#include "liq/inverse.hpp"
#include "liq/kernels.hpp"

namespace {

  using liq::kernels::Exec;

  liq::FiniteSemigroup instance(std::int64_t k) {
    // B⁰(Z_k, 3) has 9k + 1 elements.
    return liq::brandt(liq::cyclic_group(static_cast<std::size_t>(k)), 3).semigroup;
  }

  template <Exec exec>
  void associativity(benchmark::State& state) {
    auto const S = instance(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(liq::kernels::associative(S.size(), S.table(), exec));
    }
    state.SetLabel("n=" + std::to_string(S.size()));
  }

  template <Exec exec>
  void r_star(benchmark::State& state) {
    auto const S = instance(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(liq::kernels::r_star_matrix(S, exec));
    }
    state.SetLabel("n=" + std::to_string(S.size()));
  }

  template <Exec exec>
  void enumeration(benchmark::State& state) {
    liq::EnumerateOptions options;
    options.order = static_cast<std::size_t>(state.range(0));
    options.exec  = exec;
    for (auto _ : state) {
      benchmark::DoNotOptimize(liq::enumerate_semigroups(options).size());
    }
  }

}  // namespace

BENCHMARK(associativity<Exec::serial>)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(associativity<Exec::parallel>)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(r_star<Exec::serial>)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(r_star<Exec::parallel>)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(enumeration<Exec::serial>)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(enumeration<Exec::parallel>)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
