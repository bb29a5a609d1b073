#include "primefree/checker.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "primefree/arith.hpp"
#include "primefree/errors.hpp"
#include "primefree/parallel.hpp"

namespace primefree::checker {

namespace {

using u64 = std::uint64_t;

// Why checking q = 0..p-1 certifies a witness for every n == r (mod d):
// write n = dq + r and s = r^t mod d. Expanding (dq + r)^t binomially,
// every term with j >= 1 powers of dq carries a factor d^j, so
//
//   floor((dq+r)^t / d) = ((dq+r)^t - s) / d = Q(q) + (r^t - s)/d
//
// where Q is a polynomial in q with integer coefficients (each binomial
// term divided by a single d) and (r^t - s)/d is the integer
// floor(r^t/d). A polynomial with integer coefficients takes values mod
// p that depend only on q mod p; hence residues for q = 0..p-1 repeat
// for all q, and p consecutive zeros prove divisibility for the whole
// class.
//
// The residue itself is recovered without full-precision powers: n^t
// mod dp is congruent to s mod d, so it equals d*u + s with
// u = floor(n^t/d) mod p.
u64 term_mod_p(u64 n, u64 t, u64 d, u64 s, u64 p) {
  const u64 w = arith::mod_pow(n, t, d * p);
  return (w - s) / d % p;
}

bool pow_eq(u64 base, u64 k, u64 target) {
  unsigned __int128 acc = 1;
  while (k--) {
    acc *= base;
    if (acc > target) return false;
    if (acc == 0) break;
  }
  return acc == target;
}

// Smallest term past the threshold is 2^t * d^(t-1); a witness prime
// must stay below it or divisibility would not imply compositeness.
bool min_term_exceeds(u64 t, u64 d, u64 p) {
  double log2_min = static_cast<double>(t) +
                    (static_cast<double>(t) - 1.0) * std::log2(static_cast<double>(d));
  if (log2_min > std::log2(static_cast<double>(p)) + 2.0) return true;
  Natural min_term;
  mpz_ui_pow_ui(min_term.get_mpz_t(), 2, static_cast<unsigned long>(t));
  Natural rest;
  mpz_ui_pow_ui(rest.get_mpz_t(), static_cast<unsigned long>(d),
                static_cast<unsigned long>(t - 1));
  min_term *= rest;
  return min_term > p;
}

struct FailureSink {
  std::mutex mutex;
  std::vector<VerifyFailure> failures;

  void add(std::string clause, std::optional<u64> r, std::string detail) {
    std::lock_guard<std::mutex> lock(mutex);
    failures.push_back({std::move(clause), r, std::move(detail)});
  }
};

void check_class(const Certificate& cert, u64 r, const VerifyOptions& options,
                 FailureSink& sink) {
  const u64 t = cert.pair.t;
  const u64 d = cert.pair.d;
  const ClassEvidence& evidence = cert.evidence[r];

  if (const auto* power = std::get_if<PowerFactorEvidence>(&evidence)) {
    if (power->r != r) {
      sink.add("coverage", r, "power entry labels class " + std::to_string(power->r));
      return;
    }
    if (power->k < 2 || t % power->k != 0) {
      sink.add("power", r, "k=" + std::to_string(power->k) + " is not a divisor >= 2 of t");
      return;
    }
    if (power->s >= d)
      sink.add("power", r, "remainder s=" + std::to_string(power->s) + " not below d");
    if (!pow_eq(power->base, power->k, power->s))
      sink.add("power", r, "base^k != s");
    if (arith::mod_pow(r, t, d) != power->s)
      sink.add("power", r, "r^t mod d != s");
    return;
  }

  const auto& witness = std::get<WitnessEvidence>(evidence);
  if (witness.r != r) {
    sink.add("coverage", r, "witness entry labels class " + std::to_string(witness.r));
    return;
  }
  const u64 p = witness.p;
  if (p < 2 || p > options.witness_bound || !arith::is_probable_prime(p)) {
    sink.add("witness", r, "p=" + std::to_string(p) + " not a prime within bound");
    return;
  }
  if (witness.checked.size() != p) {
    sink.add("witness", r, "checked array must have exactly p entries");
    return;
  }
  for (u64 v : witness.checked)
    if (v != 0) {
      sink.add("witness", r, "stored residue nonzero");
      return;
    }
  if (!min_term_exceeds(t, d, p)) {
    sink.add("witness", r, "post-threshold terms do not exceed p");
    return;
  }
  if (d > UINT64_MAX / p) {
    sink.add("witness", r, "modulus d*p out of range");
    return;
  }
  const u64 s = arith::mod_pow(r, t, d);
  for (u64 q = 0; q < p; ++q)
    if (term_mod_p(d * q + r, t, d, s, p) != 0) {
      sink.add("witness", r, "recomputed residue nonzero at q=" + std::to_string(q));
      return;
    }
}

void check_exceptions(const Certificate& cert, const VerifyOptions& options,
                      FailureSink& sink) {
  if (!cert.exceptions_complete) return;

  if (cert.n0 >= 2 &&
      arith::term_digits(cert.n0 - 1, cert.pair.t, cert.pair.d) > options.digit_budget) {
    sink.add("exceptions", std::nullopt,
             "completeness claim not verifiable within digit budget");
    return;
  }

  std::map<u64, Natural> listed;
  u64 previous = 0;
  for (const auto& ex : cert.exceptions) {
    if (ex.n < 1 || ex.n >= cert.n0) {
      sink.add("exceptions", std::nullopt,
               "listed index n=" + std::to_string(ex.n) + " outside 1..n0-1");
      return;
    }
    if (ex.n <= previous) {
      sink.add("exceptions", std::nullopt, "exception list not strictly ascending");
      return;
    }
    previous = ex.n;
    listed.emplace(ex.n, ex.value);
  }

  parallel_collect<char>(1, cert.n0, options.workers, [&](u64 n, std::vector<char>&) {
    Natural term = arith::floor_pow_div(Natural(static_cast<unsigned long>(n)),
                                        cert.pair.t, cert.pair.d);
    auto it = listed.find(n);
    const bool prime = arith::is_probable_prime(term, options.mr_rounds);
    if (it == listed.end()) {
      if (prime)
        sink.add("exceptions", std::nullopt,
                 "prime term at n=" + std::to_string(n) + " missing from list");
    } else {
      if (it->second != term)
        sink.add("exceptions", std::nullopt,
                 "stored value at n=" + std::to_string(n) + " differs from the term");
      else if (!prime)
        sink.add("exceptions", std::nullopt,
                 "listed term at n=" + std::to_string(n) + " is not prime");
    }
  });
}

}  // namespace

Verdict verify_certificate(const Certificate& cert, const VerifyOptions& options) {
  FailureSink sink;
  const u64 d = cert.pair.d;

  if (cert.pair.t < 2 || d < 2) {
    sink.add("coverage", std::nullopt, "pair must have t >= 2 and d >= 2");
    return {false, std::move(sink.failures)};
  }
  if (cert.class_modulus != d)
    sink.add("coverage", std::nullopt, "class_modulus differs from d");
  if (cert.evidence.size() != d) {
    sink.add("coverage", std::nullopt,
             "evidence has " + std::to_string(cert.evidence.size()) +
                 " entries for d=" + std::to_string(d));
    return {false, std::move(sink.failures)};
  }
  if (cert.n0 != 2 * d)
    sink.add("threshold", std::nullopt, "n0 must equal 2d");

  parallel_collect<char>(0, d, options.workers, [&](u64 r, std::vector<char>&) {
    check_class(cert, r, options, sink);
  });

  check_exceptions(cert, options, sink);

  // workers race into the sink; order the verdict by class for stable output
  std::stable_sort(sink.failures.begin(), sink.failures.end(),
                   [](const VerifyFailure& a, const VerifyFailure& b) {
                     return a.r.value_or(0) < b.r.value_or(0);
                   });

  Verdict verdict;
  verdict.valid = sink.failures.empty();
  verdict.failures = std::move(sink.failures);
  return verdict;
}

}  // namespace primefree::checker
