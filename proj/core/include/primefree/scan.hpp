#ifndef PRIMEFREE_SCAN_HPP
#define PRIMEFREE_SCAN_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "primefree/certify.hpp"

namespace primefree {

// Census of prime terms among floor(n^t/d) for n = 1..n_max.
struct ScanReport {
  Pair pair;
  std::uint64_t n_max = 0;
  std::vector<ExceptionTerm> primes;  // ascending n
  std::uint64_t terms_scanned = 0;
  double duration_seconds = 0.0;
};

struct ScanConfig {
  std::uint64_t digit_budget = 10'000;  // max decimal digits per tested term
  unsigned mr_rounds = 40;
  unsigned workers = 0;
};

// One divisor entry of the embedded certifiable-pairs table. The
// primitive flag marks d values for which no proper divisor s of t
// yields a certifiable pair (s, d).
struct Table1Entry {
  std::uint64_t d = 0;
  bool primitive = false;
};

struct Table1Row {
  std::uint64_t t = 0;
  std::vector<Table1Entry> entries;
};

struct Table1Outcome {
  Pair pair;
  bool primitive_marked = false;
  bool certified = false;
  std::vector<std::uint64_t> uncovered;  // populated on failure
  std::optional<Certificate> certificate;
  double seconds = 0.0;
};

struct CrosscheckReport {
  bool all_composite = false;  // every tested term composite, factors reproduced
  bool complete = false;       // false when the digit budget truncated the span
};

namespace scan {

// The 21 embedded rows, t = 2..54.
const std::vector<Table1Row>& table1_rows();

// Exhaustive prime census over n = 1..n_max. Throws limit_error naming
// the last in-budget n when terms would exceed the digit budget. When
// csv is given, rows "n,digits,is_prime" stream out for every n (this
// path runs sequentially; the default path partitions across workers).
ScanReport scan_primes(const Pair& pair, std::uint64_t n_max,
                       const ScanConfig& config = {}, std::ostream* csv = nullptr);

// Certifies every pair of the embedded table (optionally only the rows
// with t in row_filter), in table order.
std::vector<Table1Outcome> reproduce_table1(
    const CertifyConfig& config = {},
    const std::vector<std::uint64_t>& row_filter = {});

// Fuzzes a certificate's conclusion directly: every term for n in
// [n0, n0+span] must fail the primality test, and for power-factor
// classes the two-factor split (n^(t/k)-base)/g * cofactor/(d/g),
// g = gcd(d, n^(t/k)-base), must reproduce the term as a product of
// integers both > 1. Checks the sequence, not the evidence; the checker
// remains the authority on evidence.
CrosscheckReport composite_crosscheck(const Certificate& cert, std::uint64_t span,
                                      const ScanConfig& config = {});

std::string report_to_json(const ScanReport& report);

}  // namespace scan
}  // namespace primefree

#endif  // PRIMEFREE_SCAN_HPP
