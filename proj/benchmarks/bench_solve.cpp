#include "coadm/solve.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace coadm;

namespace {

Op random_int_op(int rows, int cols, long p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> val(-50, 50);
  auto mk = [&](int n, const char* name) {
    std::vector<std::string> ls;
    for (int i = 0; i < n; ++i) ls.push_back(std::string(name) + std::to_string(i));
    return Space::make(p, name, ls);
  };
  auto dom = mk(cols, "x");
  auto cod = mk(rows, "y");
  return Op::from_columns(dom, cod, [&](int) {
    std::vector<std::pair<int, Scalar>> cs;
    for (int i = 0; i < rows; ++i) {
      long x = val(rng);
      if (x) cs.emplace_back(i, Scalar::exact(p, x));
    }
    return Vec(cod, std::move(cs));
  });
}

void BM_kernel_dense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Op T = random_int_op(n, 2 * n, 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(T, 20));
}
BENCHMARK(BM_kernel_dense)->Arg(6)->Arg(12)->Arg(24);

void BM_echelonize_sparse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto space = Space::make(5, "V", [&] {
    std::vector<std::string> ls;
    for (int i = 0; i < n; ++i) ls.push_back("e" + std::to_string(i));
    return ls;
  }());
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<long> val(-20, 20);
  std::vector<Vec> vs;
  for (int r = 0; r < n; ++r) {
    std::vector<std::pair<int, Scalar>> cs;
    for (int t = 0; t < 4; ++t) {
      int i = idx(rng);
      long x = val(rng);
      bool dup = false;
      for (auto& [j, c] : cs) dup = dup || j == i;
      if (!dup && x) cs.emplace_back(i, Scalar::exact(5, x));
    }
    vs.push_back(Vec(space, cs));
  }
  for (auto _ : state) benchmark::DoNotOptimize(echelonize(space, vs, 20));
}
BENCHMARK(BM_echelonize_sparse)->Arg(64)->Arg(256);

}  // namespace
