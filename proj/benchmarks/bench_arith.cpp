#include <benchmark/benchmark.h>

#include "primefree/arith.hpp"

using namespace primefree;

static void BM_ModPowWord(benchmark::State& state) {
  const std::uint64_t m = 18446744073709551557ULL;
  std::uint64_t base = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(arith::mod_pow(base, m - 1, m));
    base += 2;
  }
}
BENCHMARK(BM_ModPowWord);

static void BM_IsProbablePrimeWord(benchmark::State& state) {
  std::uint64_t x = 18446744073709551557ULL;
  for (auto _ : state) {
    benchmark::DoNotOptimize(arith::is_probable_prime(x));
  }
}
BENCHMARK(BM_IsProbablePrimeWord);

static void BM_IsProbablePrimeBig(benchmark::State& state) {
  Natural x = (Natural(1) << static_cast<unsigned>(state.range(0))) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(arith::is_probable_prime(x, 10));
  }
}
BENCHMARK(BM_IsProbablePrimeBig)->Arg(127)->Arg(521)->Arg(1279);

static void BM_FloorPowDiv(benchmark::State& state) {
  const std::uint64_t t = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t n = 5328;
  for (auto _ : state) {
    benchmark::DoNotOptimize(arith::floor_pow_div(Natural((unsigned long)n), t, 2664));
    ++n;
  }
}
BENCHMARK(BM_FloorPowDiv)->Arg(8)->Arg(36)->Arg(54);

static void BM_IntKthRoot(benchmark::State& state) {
  Natural s("123456789123456789123456789123456789");
  for (auto _ : state) {
    benchmark::DoNotOptimize(arith::int_kth_root(s, 5));
  }
}
BENCHMARK(BM_IntKthRoot);
