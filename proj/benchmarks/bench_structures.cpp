#include "coadm/admissible.hpp"

#include <benchmark/benchmark.h>

using namespace coadm;

namespace {

void BM_check_coalgebra_mahler(benchmark::State& state) {
  Coalgebra c = mahler_coalgebra(5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_coalgebra(c, 20));
}
BENCHMARK(BM_check_coalgebra_mahler)->Arg(8)->Arg(16);

void BM_check_hopf_mahler(benchmark::State& state) {
  HopfAlgebra h = mahler_hopf(5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_hopf(h, 20));
}
BENCHMARK(BM_check_hopf_mahler)->Arg(4)->Arg(8);

void BM_cotensor_regular(benchmark::State& state) {
  auto c = std::make_shared<Coalgebra>(mahler_coalgebra(5, static_cast<int>(state.range(0))));
  Comodule m = regular_comodule(c);
  Comodule n = regular_comodule(c, Side::Left);
  for (auto _ : state) benchmark::DoNotOptimize(cotensor(m, n, 30));
}
BENCHMARK(BM_cotensor_regular)->Arg(4)->Arg(8);

void BM_check_admissible_regular(benchmark::State& state) {
  CtSystem sys = mahler_ct(5, static_cast<int>(state.range(0)), 4);
  AdmissibleStructure s = regular_admissible(sys);
  for (auto _ : state) benchmark::DoNotOptimize(check_admissible(s, 30, 20));
}
BENCHMARK(BM_check_admissible_regular)->Arg(4)->Arg(8);

}  // namespace
