#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "primefree/checker.hpp"
#include "primefree/errors.hpp"
#include "primefree/scan.hpp"

using namespace primefree;
using u64 = std::uint64_t;

TEST_CASE("the motivating scan finds exactly three primes") {
  ScanReport report = scan::scan_primes({2, 5}, 10000);
  REQUIRE(report.primes.size() == 3);
  CHECK(report.primes[0] == ExceptionTerm{4, Natural(3)});
  CHECK(report.primes[1] == ExceptionTerm{5, Natural(5)});
  CHECK(report.primes[2] == ExceptionTerm{6, Natural(7)});
  CHECK(report.terms_scanned == 10000);
}

TEST_CASE("short prefixes hold no primes") {
  CHECK(scan::scan_primes({2, 5}, 3).primes.empty());
}

TEST_CASE("uncovered pairs yield primes quickly") {
  ScanReport report = scan::scan_primes({2, 7}, 100);
  auto expected = oracles::prime_terms(2, 7, 100);
  REQUIRE(report.primes.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(report.primes[i].n == expected[i].first);
    CHECK(report.primes[i].value == expected[i].second);
  }
  // frozen: the first prime is floor(4^2/7) = 2
  REQUIRE_FALSE(report.primes.empty());
  CHECK(report.primes[0] == ExceptionTerm{4, Natural(2)});

  CHECK_FALSE(scan::scan_primes({3, 5}, 100).primes.empty());
}

TEST_CASE("scan reports are deterministic across runs and workers") {
  ScanConfig one;
  one.workers = 1;
  ScanConfig four;
  four.workers = 4;
  ScanReport a = scan::scan_primes({2, 7}, 500, one);
  ScanReport b = scan::scan_primes({2, 7}, 500, four);
  ScanReport c = scan::scan_primes({2, 7}, 500, four);
  CHECK(a.primes == b.primes);
  CHECK(b.primes == c.primes);
  CHECK(a.terms_scanned == b.terms_scanned);
}

TEST_CASE("deeper exponents scan a subsequence") {
  // every value of the (4,5) scan appears among (2,5) values at n^2
  ScanReport outer = scan::scan_primes({2, 5}, 10000);
  ScanReport inner = scan::scan_primes({4, 5}, 100);
  std::set<Natural> outer_values;
  for (const auto& p : outer.primes) outer_values.insert(p.value);
  for (const auto& p : inner.primes) {
    CHECK(outer_values.count(p.value) == 1);
  }
}

TEST_CASE("digit budget split names the limiting n") {
  ScanConfig tiny;
  tiny.digit_budget = 50;
  try {
    scan::scan_primes({54, 5}, 1'000'000, tiny);
    REQUIRE(false);
  } catch (const limit_error& e) {
    const std::string what = e.what();
    CHECK(what.find("n_max=1000000") != std::string::npos);
    CHECK(what.find("admits n <=") != std::string::npos);
  }
  // the same pair scans fine below the cutoff
  CHECK_NOTHROW(scan::scan_primes({54, 5}, 8, tiny));
}

TEST_CASE("csv output carries one row per index") {
  std::ostringstream csv;
  ScanReport report = scan::scan_primes({2, 5}, 50, {}, &csv);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,digits,is_prime");
  u64 rows = 0, primes = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (line.ends_with(",1")) ++primes;
  }
  CHECK(rows == 50);
  CHECK(primes == report.primes.size());
}

TEST_CASE("report JSON shape is stable") {
  ScanReport report = scan::scan_primes({2, 5}, 10);
  std::string text = scan::report_to_json(report);
  const auto at = text.find("\"duration_seconds\":");
  REQUIRE(at != std::string::npos);
  // duration varies; splice it out before comparing
  const auto comma = text.find(',', at);
  text = text.substr(0, at + 19 /* key + quotes + colon */) + text.substr(comma);
  CHECK(text ==
        R"({"duration_seconds":,"n_max":"10","pair":{"d":"5","t":"2"},)"
        R"("primes":[{"n":"4","value":"3"},{"n":"5","value":"5"},{"n":"6","value":"7"}],)"
        R"("terms_scanned":"10"})");
}

TEST_CASE("embedded table matches the per-exponent theorem lists") {
  const auto& rows = scan::table1_rows();
  REQUIRE(rows.size() == 21);

  auto row_divisors = [&](u64 t) {
    std::vector<u64> ds;
    for (const auto& row : rows)
      if (row.t == t)
        for (const auto& e : row.entries) ds.push_back(e.d);
    return ds;
  };

  CHECK(row_divisors(2) == std::vector<u64>{2, 3, 4, 5, 8, 12, 16});
  CHECK(row_divisors(3) == std::vector<u64>{2, 9});
  CHECK(row_divisors(4) == std::vector<u64>{2, 3, 4, 5, 8, 12, 16, 24, 40});
  CHECK(row_divisors(6) == std::vector<u64>{2, 3, 4, 5, 7, 8, 9, 12, 16, 24, 56, 72});
  CHECK(row_divisors(8) ==
        std::vector<u64>{2, 3, 4, 5, 8, 12, 16, 17, 24, 32, 40, 48, 80, 112});
  CHECK(row_divisors(10) == std::vector<u64>{2, 3, 4, 5, 8, 11, 12, 16, 24, 40});

  u64 total = 0;
  std::vector<u64> ts;
  for (const auto& row : rows) {
    ts.push_back(row.t);
    total += row.entries.size();
    for (std::size_t i = 1; i < row.entries.size(); ++i)
      REQUIRE(row.entries[i - 1].d < row.entries[i].d);
  }
  CHECK(ts == std::vector<u64>{2, 3, 4, 6, 8, 10, 12, 16, 18, 20, 22, 24, 28,
                               30, 32, 36, 40, 42, 50, 52, 54});
  CHECK(total == 276);
}

TEST_CASE("primitivity marks match the subsequence relation on sample rows") {
  const auto& rows = scan::table1_rows();
  // rows t=2 and t=3 are all primitive; inherited entries of t=4 are not
  for (const auto& row : rows) {
    if (row.t == 2 || row.t == 3)
      for (const auto& e : row.entries) CHECK(e.primitive);
    if (row.t == 4)
      for (const auto& e : row.entries) CHECK(e.primitive == (e.d == 24 || e.d == 40));
    if (row.t == 6)
      for (const auto& e : row.entries)
        CHECK(e.primitive == (e.d == 7 || e.d == 24 || e.d == 56 || e.d == 72));
  }
}

TEST_CASE("a primitive mark really has no certifiable sub-pair") {
  // (6,7) is marked primitive: (2,7) and (3,7) must both resist
  CHECK_FALSE(certified(certify::certify_pair({2, 7})));
  CHECK_FALSE(certified(certify::certify_pair({3, 7})));
  // (4,24) is marked primitive at t=4: (2,24) must resist
  CHECK_FALSE(certified(certify::certify_pair({2, 24})));
  // (8,40) is inherited: (4,40) certifies
  CHECK(certified(certify::certify_pair({4, 40})));
}

TEST_CASE("no table pair needs a witness prime beyond five") {
  // the witness bound of 97 is generous; in practice {2,3,5} suffice.
  // A regression pushing any class past the bound turns the row into a
  // Failure and trips the reproduction tests loudly.
  CertifyConfig config;
  config.scan_exceptions = false;
  std::set<u64> seen;
  for (const auto& outcome : scan::reproduce_table1(config)) {
    REQUIRE(outcome.certified);
    for (const auto& e : outcome.certificate->evidence)
      if (const auto* w = std::get_if<WitnessEvidence>(&e)) seen.insert(w->p);
  }
  CHECK(seen == std::set<u64>{2, 3, 5});
}

TEST_CASE("single-row table reproduction") {
  auto outcomes = scan::reproduce_table1({}, {2});
  REQUIRE(outcomes.size() == 7);
  for (const auto& o : outcomes) {
    CHECK(o.pair.t == 2);
    CHECK(o.certified);
    REQUIRE(o.certificate.has_value());
    CHECK(o.certificate->exceptions_complete);
  }
}

TEST_CASE("crosscheck accepts the certified sequences") {
  auto c25 = certify::certify_pair({2, 5});
  CrosscheckReport r25 = scan::composite_crosscheck(std::get<Certificate>(c25), 2000);
  CHECK(r25.all_composite);
  CHECK(r25.complete);

  CertifyConfig config;
  config.scan_exceptions = false;
  auto c112 = certify::certify_pair({8, 112}, config);
  CrosscheckReport r112 = scan::composite_crosscheck(std::get<Certificate>(c112), 500);
  CHECK(r112.all_composite);
  CHECK(r112.complete);
}

TEST_CASE("crosscheck tests the sequence, not the evidence") {
  // a tampered exception list is invisible to the crosscheck; the
  // checker is the authority for evidence
  auto result = certify::certify_pair({2, 5});
  Certificate cert = std::get<Certificate>(result);
  cert.exceptions.clear();
  CHECK(scan::composite_crosscheck(cert, 200).all_composite);
}

TEST_CASE("crosscheck flags truncation by the digit budget") {
  auto result = certify::certify_pair({2, 5});
  ScanConfig tiny;
  tiny.digit_budget = 3;  // floor(n^2/5) outgrows 3 digits within the span
  CrosscheckReport report =
      scan::composite_crosscheck(std::get<Certificate>(result), 2000, tiny);
  CHECK_FALSE(report.complete);
}
