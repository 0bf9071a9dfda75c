#include "coadm/scalar.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace coadm;

namespace {

std::vector<Scalar> tracked_values(int n, long p) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> val(1, 100000);
  std::vector<Scalar> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(Scalar::tracked(p, Rational(val(rng)), 30));
  return out;
}

void BM_scalar_mul_tracked(benchmark::State& state) {
  auto xs = tracked_values(256, 5);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i % 256] * xs[(i + 7) % 256]);
    ++i;
  }
}
BENCHMARK(BM_scalar_mul_tracked);

void BM_scalar_add_cancelling(benchmark::State& state) {
  auto xs = tracked_values(256, 5);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i % 256] - xs[i % 256]);
    ++i;
  }
}
BENCHMARK(BM_scalar_add_cancelling);

void BM_scalar_div_tracked(benchmark::State& state) {
  auto xs = tracked_values(256, 5);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i % 256] / xs[(i + 13) % 256]);
    ++i;
  }
}
BENCHMARK(BM_scalar_div_tracked);

}  // namespace
