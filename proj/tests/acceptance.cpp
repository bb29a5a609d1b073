// Acceptance suite: one line per criterion, nonzero exit when any
// criterion fails. Criteria are pinned here, not tunable from outside.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "primefree/arith.hpp"
#include "primefree/certify.hpp"
#include "primefree/checker.hpp"
#include "primefree/families.hpp"
#include "primefree/parallel.hpp"
#include "primefree/scan.hpp"

namespace {

using namespace primefree;
using u64 = std::uint64_t;

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> body;
};

bool expect(bool condition, const std::string& message, std::string& detail) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

// ---- 1. every embedded table pair certifies and verifies -------------------

bool table1_reproduction(std::string& detail) {
  const auto started = std::chrono::steady_clock::now();
  auto outcomes = scan::reproduce_table1();
  bool ok = expect(outcomes.size() == 276, "expected 276 table pairs", detail);
  for (const auto& outcome : outcomes) {
    const std::string tag = "(" + std::to_string(outcome.pair.t) + "," +
                            std::to_string(outcome.pair.d) + ")";
    if (!expect(outcome.certified, tag + " failed to certify", detail)) {
      ok = false;
      continue;
    }
    Verdict verdict = checker::verify_certificate(*outcome.certificate);
    ok &= expect(verdict.valid, tag + " certificate rejected by the checker", detail);
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  ok &= expect(elapsed < 300.0, "run exceeded five minutes", detail);
  return ok;
}

// ---- 2. the motivating scan ------------------------------------------------

bool motivating_scan(std::string& detail) {
  ScanReport report = scan::scan_primes({2, 5}, 10000);
  bool ok = expect(report.primes.size() == 3, "expected exactly three primes", detail);
  if (ok) {
    ok &= expect(report.primes[0] == ExceptionTerm{4, Natural(3)}, "a_4 != 3", detail);
    ok &= expect(report.primes[1] == ExceptionTerm{5, Natural(5)}, "a_5 != 5", detail);
    ok &= expect(report.primes[2] == ExceptionTerm{6, Natural(7)}, "a_6 != 7", detail);
  }
  return ok;
}

// ---- 3. quoted constants ---------------------------------------------------

bool quoted_constants(std::string& detail) {
  bool ok = true;
  ok &= expect(arith::floor_pow_div(Natural(3), 8, 48) == 136, "floor(3^8/48)", detail);
  ok &= expect(arith::floor_pow_div(Natural(5), 8, 80) == 4882, "floor(5^8/80)", detail);
  ok &= expect(arith::floor_pow_div(Natural(2), 10, 40) == 25, "floor(2^10/40)", detail);
  ok &= expect(arith::floor_pow_div(Natural(3), 8, 112) == 58, "floor(3^8/112)", detail);

  auto residues = [](u64 t, u64 d) {
    std::set<u64> out;
    for (const Natural& v : certify::residue_set(t, d)) out.insert(v.get_ui());
    return out;
  };
  ok &= expect(residues(2, 5) == std::set<u64>{0, 1, 4}, "residues(2,5)", detail);
  ok &= expect(residues(8, 48) == std::set<u64>{0, 1, 16, 33}, "residues(8,48)", detail);
  ok &= expect(residues(6, 7) == std::set<u64>{0, 1}, "residues(6,7)", detail);
  ok &= expect(residues(10, 11) == std::set<u64>{0, 1}, "residues(10,11)", detail);
  return ok;
}

// ---- 4. family generators --------------------------------------------------

bool family_generators(std::string& detail) {
  auto q2 = families::q2plus1_pairs(16);
  std::vector<Pair> q2_pairs;
  for (const auto& inst : q2) q2_pairs.push_back(*inst.pair);
  bool ok = expect(q2_pairs == std::vector<Pair>{{2, 5},
                                                 {8, 17},
                                                 {18, 37},
                                                 {50, 101},
                                                 {98, 197},
                                                 {128, 257}},
                   "q^2+1 list mismatch", detail);

  auto q6 = families::q6q3plus1_pairs(8);
  std::vector<Pair> q6_pairs;
  for (const auto& inst : q6) q6_pairs.push_back(*inst.pair);
  ok &= expect(q6_pairs == std::vector<Pair>{{24, 73}, {252, 757}, {87552, 262657}},
               "q^6+q^3+1 list mismatch", detail);

  std::vector<Pair> to_certify = q2_pairs;
  to_certify.push_back(Pair{24, 73});
  to_certify.push_back(Pair{252, 757});
  for (Pair pair : to_certify) {
    if (pair.t > 252) continue;
    auto result = certify::certify_pair(pair);
    const std::string tag = "(" + std::to_string(pair.t) + "," +
                            std::to_string(pair.d) + ")";
    if (!expect(certified(result), tag + " failed to certify", detail)) {
      ok = false;
      continue;
    }
    for (const auto& evidence : std::get<Certificate>(result).evidence)
      ok &= expect(std::holds_alternative<PowerFactorEvidence>(evidence),
                   tag + " produced non-power evidence", detail);
  }
  return ok;
}

// ---- 5. wilson family ------------------------------------------------------

bool wilson_family(std::string& detail) {
  bool ok = true;
  for (u64 p : {u64(5), u64(7), u64(11), u64(13)}) {
    const auto params = families::wilson_params(p);
    ok &= expect(params.size() == (p - 1) / 2, "offset count", detail);
    for (u64 c : params) {
      auto bad = parallel_collect<std::string>(
          1, 10'001, 0, [&](u64 n, std::vector<std::string>& out) {
            try {
              WilsonTerm term = families::wilson_term_factor(p, c, n);
              if (term.factor < 2 || term.factor >= p)
                out.push_back("factor out of range at n=" + std::to_string(n));
              else if (!mpz_divisible_ui_p(
                           term.q_n.get_mpz_t(),
                           static_cast<unsigned long>(term.factor)))
                out.push_back("factor does not divide at n=" + std::to_string(n));
              else if (term.degenerate)
                out.push_back("degenerate term at n=" + std::to_string(n));
            } catch (const std::exception& e) {
              out.push_back(std::string("r=1 or failure: ") + e.what());
            }
          });
      if (!bad.empty()) {
        ok = expect(false,
                    "p=" + std::to_string(p) + " c=" + std::to_string(c) + ": " +
                        bad.front(),
                    detail);
      }
    }
  }
  return ok;
}

// ---- 6. property suite -----------------------------------------------------

bool property_suite(std::string& detail) {
  bool ok = true;
  CertifyConfig no_exceptions;
  no_exceptions.scan_exceptions = false;

  // witness periodicity to q = 1000, full precision
  for (Pair pair : {Pair{8, 48}, Pair{8, 80}, Pair{8, 112}, Pair{10, 40},
                    Pair{30, 1116}}) {
    auto result = certify::certify_pair(pair, no_exceptions);
    if (!expect(certified(result), "periodicity pair failed to certify", detail))
      return false;
    const Certificate& cert = std::get<Certificate>(result);
    std::vector<const WitnessEvidence*> witnesses;
    for (const auto& e : cert.evidence)
      if (const auto* w = std::get_if<WitnessEvidence>(&e)) witnesses.push_back(w);
    auto breaks = parallel_collect<u64>(
        0, witnesses.size(), 0, [&](u64 i, std::vector<u64>& out) {
          const WitnessEvidence& w = *witnesses[i];
          std::vector<u64> residue(1001 + w.p);
          for (u64 q = 0; q < residue.size(); ++q) {
            Natural value = arith::floor_pow_div(
                Natural(static_cast<unsigned long>(pair.d * q + w.r)), pair.t,
                pair.d);
            residue[q] = mpz_fdiv_ui(value.get_mpz_t(),
                                     static_cast<unsigned long>(w.p));
          }
          for (u64 q = 0; q <= 1000; ++q) {
            // period p in q, and zero on certified witness classes
            if (residue[q] != residue[q + w.p] || residue[q] != 0) {
              out.push_back(w.r);
              return;
            }
          }
        });
    ok &= expect(breaks.empty(), "periodicity break in witness classes", detail);
  }

  // modular shortcut vs full precision on every table pair with d <= 120
  for (const Table1Row& row : scan::table1_rows()) {
    for (const Table1Entry& entry : row.entries) {
      if (entry.d > 120) continue;
      const u64 t = row.t, d = entry.d;
      auto mismatches = parallel_collect<u64>(
          0, d, 0, [&](u64 r, std::vector<u64>& out) {
            const u64 s = arith::mod_pow(r, t, d);
            for (u64 p : {u64(2), u64(3), u64(5), u64(7)}) {
              for (u64 q = 0; q <= 100; ++q) {
                const u64 n = d * q + r;
                const u64 shortcut = (arith::mod_pow(n, t, d * p) - s) / d % p;
                Natural full = arith::floor_pow_div(
                    Natural(static_cast<unsigned long>(n)), t, d);
                if (shortcut !=
                    mpz_fdiv_ui(full.get_mpz_t(), static_cast<unsigned long>(p))) {
                  out.push_back(r);
                  return;
                }
              }
            }
          });
      ok &= expect(mismatches.empty(),
                   "shortcut mismatch at t=" + std::to_string(t) +
                       " d=" + std::to_string(d),
                   detail);
    }
  }

  // brute-force compositeness over [2d, 2d+2000] for every table pair
  auto outcomes = scan::reproduce_table1(no_exceptions);
  for (const auto& outcome : outcomes) {
    if (!expect(outcome.certified, "table pair failed during crosscheck", detail))
      return false;
    CrosscheckReport report =
        scan::composite_crosscheck(*outcome.certificate, 2000);
    ok &= expect(report.all_composite && report.complete,
                 "crosscheck failed at (" + std::to_string(outcome.pair.t) + "," +
                     std::to_string(outcome.pair.d) + ")",
                 detail);
  }

  // tamper detection: every single integer-field mutation is rejected
  for (Pair pair : {Pair{2, 5}, Pair{8, 48}}) {
    auto result = certify::certify_pair(pair);
    const Certificate& cert = std::get<Certificate>(result);
    nlohmann::json base = nlohmann::json::parse(certify::certificate_to_json(cert));
    std::function<void(nlohmann::json&, std::vector<nlohmann::json*>&)> collect =
        [&](nlohmann::json& j, std::vector<nlohmann::json*>& leaves) {
          if (j.is_object() || j.is_array())
            for (auto& child : j) collect(child, leaves);
          else if (j.is_string())
            leaves.push_back(&j);
        };
    std::vector<nlohmann::json*> leaves;
    collect(base, leaves);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      nlohmann::json mutated = base;
      std::vector<nlohmann::json*> mutated_leaves;
      collect(mutated, mutated_leaves);
      const std::string value = mutated_leaves[i]->get<std::string>();
      if (value.find_first_not_of("0123456789") != std::string::npos)
        *mutated_leaves[i] = value + "x";  // type tags: parser must refuse
      else
        *mutated_leaves[i] = Natural(Natural(value) + 1).get_str();
      bool rejected;
      try {
        rejected =
            !checker::verify_certificate(certify::certificate_from_json(mutated.dump()))
                 .valid;
      } catch (const std::exception&) {
        rejected = true;
      }
      ok &= expect(rejected, "mutation " + std::to_string(i) + " of (" +
                                 std::to_string(pair.t) + "," +
                                 std::to_string(pair.d) + ") passed verification",
                   detail);
    }
  }
  return ok;
}

// ---- 7. negative control ---------------------------------------------------

bool negative_control(std::string& detail) {
  bool ok = true;
  ok &= expect(!certified(certify::certify_pair({2, 7})), "(2,7) certified", detail);
  ok &= expect(!certified(certify::certify_pair({3, 5})), "(3,5) certified", detail);
  ok &= expect(!scan::scan_primes({2, 7}, 100).primes.empty(),
               "(2,7) scan found no primes", detail);
  ok &= expect(!scan::scan_primes({3, 5}, 100).primes.empty(),
               "(3,5) scan found no primes", detail);
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1. table reproduction: all 276 pairs certify and verify", table1_reproduction},
      {"2. motivating scan reports primes {3,5,7} only", motivating_scan},
      {"3. quoted constants and residue sets reproduced exactly", quoted_constants},
      {"4. family generators match the displayed lists, power-only evidence",
       family_generators},
      {"5. wilson terms carry verified factors below p, remainder 1 never occurs",
       wilson_family},
      {"6. property suite: periodicity, shortcut, compositeness, tamper detection",
       property_suite},
      {"7. negative control: (2,7) and (3,5) fail and contain primes",
       negative_control},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto started = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    std::cout << (ok ? "PASS" : "FAIL") << "  " << criterion.name << "  ["
              << elapsed << "s]";
    if (!ok) std::cout << "  -- " << detail;
    std::cout << "\n";
    failures += !ok;
  }
  return failures;
}
