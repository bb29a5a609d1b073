#include <benchmark/benchmark.h>

#include "primefree/certify.hpp"
#include "primefree/checker.hpp"
#include "primefree/scan.hpp"

using namespace primefree;

static void BM_CertifyEvidenceOnly(benchmark::State& state) {
  const Pair pair{static_cast<std::uint64_t>(state.range(0)),
                  static_cast<std::uint64_t>(state.range(1))};
  CertifyConfig config;
  config.scan_exceptions = false;
  config.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify::certify_pair(pair, config));
  }
}
BENCHMARK(BM_CertifyEvidenceOnly)
    ->Args({8, 48})
    ->Args({30, 1116})
    ->Args({36, 2664});

static void BM_CertifyWithExceptions(benchmark::State& state) {
  const Pair pair{static_cast<std::uint64_t>(state.range(0)),
                  static_cast<std::uint64_t>(state.range(1))};
  CertifyConfig config;
  config.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify::certify_pair(pair, config));
  }
}
BENCHMARK(BM_CertifyWithExceptions)->Args({8, 48})->Args({36, 2664});

static void BM_VerifyCertificate(benchmark::State& state) {
  CertifyConfig config;
  config.scan_exceptions = false;
  auto result = certify::certify_pair(
      {static_cast<std::uint64_t>(state.range(0)),
       static_cast<std::uint64_t>(state.range(1))},
      config);
  const Certificate& cert = std::get<Certificate>(result);
  VerifyOptions options;
  options.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(checker::verify_certificate(cert, options));
  }
}
BENCHMARK(BM_VerifyCertificate)->Args({8, 48})->Args({30, 1116});

static void BM_ScanPrimes(benchmark::State& state) {
  ScanConfig config;
  config.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan::scan_primes({2, 5}, state.range(0), config));
  }
}
BENCHMARK(BM_ScanPrimes)->Arg(1000)->Arg(10000);
