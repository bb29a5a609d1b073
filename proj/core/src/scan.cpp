#include "primefree/scan.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "json.hpp"
#include "primefree/arith.hpp"
#include "primefree/errors.hpp"
#include "primefree/parallel.hpp"

namespace primefree::scan {

namespace {

using u64 = std::uint64_t;

// Largest n whose term stays within the digit budget.
u64 budget_limit(const Pair& pair, u64 n_max, u64 budget) {
  if (arith::term_digits(n_max, pair.t, pair.d) <= budget) return n_max;
  u64 lo = 1, hi = n_max;
  while (lo < hi) {
    const u64 mid = lo + (hi - lo + 1) / 2;
    if (arith::term_digits(mid, pair.t, pair.d) <= budget)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace

ScanReport scan_primes(const Pair& pair, u64 n_max, const ScanConfig& config,
                       std::ostream* csv) {
  if (!pair.valid())
    throw std::domain_error("scan_primes: requires t >= 2 and d >= 2");
  if (n_max < 1) throw std::domain_error("scan_primes: n_max must be >= 1");

  const u64 limit = budget_limit(pair, n_max, config.digit_budget);
  if (limit < n_max)
    throw limit_error("scan_primes: digit budget " +
                      std::to_string(config.digit_budget) + " admits n <= " +
                      std::to_string(limit) + ", requested n_max=" +
                      std::to_string(n_max));

  const auto started = std::chrono::steady_clock::now();
  ScanReport report;
  report.pair = pair;
  report.n_max = n_max;
  report.terms_scanned = n_max;

  if (csv != nullptr) {
    *csv << "n,digits,is_prime\n";
    for (u64 n = 1; n <= n_max; ++n) {
      Natural term = arith::floor_pow_div(Natural(static_cast<unsigned long>(n)),
                                          pair.t, pair.d);
      const bool prime = arith::is_probable_prime(term, config.mr_rounds);
      *csv << n << ',' << mpz_sizeinbase(term.get_mpz_t(), 10) << ','
           << (prime ? 1 : 0) << '\n';
      if (prime) report.primes.push_back({n, std::move(term)});
    }
  } else {
    report.primes = parallel_collect<ExceptionTerm>(
        1, n_max + 1, config.workers, [&](u64 n, std::vector<ExceptionTerm>& out) {
          Natural term = arith::floor_pow_div(
              Natural(static_cast<unsigned long>(n)), pair.t, pair.d);
          if (arith::is_probable_prime(term, config.mr_rounds))
            out.push_back({n, std::move(term)});
        });
  }

  report.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

std::vector<Table1Outcome> reproduce_table1(const CertifyConfig& config,
                                            const std::vector<u64>& row_filter) {
  std::vector<Table1Outcome> outcomes;
  for (const Table1Row& row : table1_rows()) {
    if (!row_filter.empty() &&
        std::find(row_filter.begin(), row_filter.end(), row.t) == row_filter.end())
      continue;
    for (const Table1Entry& entry : row.entries) {
      Table1Outcome outcome;
      outcome.pair = Pair{row.t, entry.d};
      outcome.primitive_marked = entry.primitive;
      const auto started = std::chrono::steady_clock::now();
      CertifyResult result = certify::certify_pair(outcome.pair, config);
      outcome.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
              .count();
      if (auto* cert = std::get_if<Certificate>(&result)) {
        outcome.certified = true;
        outcome.certificate = std::move(*cert);
      } else {
        outcome.certified = false;
        outcome.uncovered = std::get<CertifyFailure>(result).uncovered;
      }
      outcomes.push_back(std::move(outcome));
    }
  }
  return outcomes;
}

CrosscheckReport composite_crosscheck(const Certificate& cert, u64 span,
                                      const ScanConfig& config) {
  if (span < 1) throw std::domain_error("composite_crosscheck: span must be >= 1");
  const Pair pair = cert.pair;
  const u64 t = pair.t;
  const u64 d = pair.d;
  const u64 last = cert.n0 + span;

  CrosscheckReport report;
  const u64 limit = budget_limit(pair, last, config.digit_budget);
  report.complete = limit >= last;
  const u64 end = std::min(last, limit);

  auto offences = parallel_collect<u64>(
      cert.n0, end + 1, config.workers, [&](u64 n, std::vector<u64>& bad) {
        const Natural big_n(static_cast<unsigned long>(n));
        Natural term = arith::floor_pow_div(big_n, t, d);
        if (arith::is_probable_prime(term, config.mr_rounds)) {
          bad.push_back(n);
          return;
        }
        const u64 r = n % d;
        if (r >= cert.evidence.size()) {
          bad.push_back(n);
          return;
        }
        const auto* power = std::get_if<PowerFactorEvidence>(&cert.evidence[r]);
        if (power == nullptr) return;

        // d * term = n^t - s = (n^(t/k) - base) * cofactor; pulling the
        // factors of d apart across the two sides must rebuild the term.
        Natural root_pow;
        mpz_pow_ui(root_pow.get_mpz_t(), big_n.get_mpz_t(),
                   static_cast<unsigned long>(t / power->k));
        Natural a = root_pow - power->base;
        Natural full;
        mpz_pow_ui(full.get_mpz_t(), big_n.get_mpz_t(), static_cast<unsigned long>(t));
        Natural numerator = full - power->s;
        if (a == 0 || !mpz_divisible_p(numerator.get_mpz_t(), a.get_mpz_t())) {
          bad.push_back(n);
          return;
        }
        Natural cofactor = numerator / a;
        Natural g;
        mpz_gcd_ui(g.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(d));
        Natural d_rest = Natural(static_cast<unsigned long>(d)) / g;
        if (!mpz_divisible_p(cofactor.get_mpz_t(), d_rest.get_mpz_t())) {
          bad.push_back(n);
          return;
        }
        Natural f1 = a / g;
        Natural f2 = cofactor / d_rest;
        if (f1 <= 1 || f2 <= 1 || f1 * f2 != term) bad.push_back(n);
      });

  report.all_composite = offences.empty();
  return report;
}

std::string report_to_json(const ScanReport& report) {
  nlohmann::json j;
  j["pair"] = {{"t", std::to_string(report.pair.t)},
               {"d", std::to_string(report.pair.d)}};
  j["n_max"] = std::to_string(report.n_max);
  nlohmann::json primes = nlohmann::json::array();
  for (const auto& p : report.primes)
    primes.push_back({{"n", std::to_string(p.n)}, {"value", p.value.get_str()}});
  j["primes"] = std::move(primes);
  j["terms_scanned"] = std::to_string(report.terms_scanned);
  j["duration_seconds"] = report.duration_seconds;
  return j.dump();
}

}  // namespace primefree::scan
