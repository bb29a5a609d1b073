#ifndef PRIMEFREE_CHECKER_HPP
#define PRIMEFREE_CHECKER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primefree/certify.hpp"

namespace primefree {

struct VerifyFailure {
  std::string clause;  // "coverage" | "power" | "witness" | "threshold" | "exceptions"
  std::optional<std::uint64_t> r;  // offending class, when class-specific
  std::string detail;
};

struct Verdict {
  bool valid = false;
  std::vector<VerifyFailure> failures;
};

struct VerifyOptions {
  std::uint64_t witness_bound = 97;
  std::uint64_t digit_budget = 10'000;
  unsigned mr_rounds = 40;
  unsigned workers = 0;
};

namespace checker {

// Re-derives every claim in the certificate from scratch using only the
// arithmetic primitives; none of the evidence-search code is involved,
// so a search bug cannot vouch for itself. Stored witness residues are
// audited and independently recomputed. Returns a conjunction over:
//
//   1. evidence covers classes r = 0..d-1 exactly, class_modulus == d;
//   2. power entries: k | t, k >= 2, base^k == s < d, r^t mod d == s;
//   3. witness entries: p prime and <= witness_bound, stored residues
//      all zero with exactly p of them, recomputed residues all zero,
//      and the minimal post-threshold term exceeds p;
//   4. n0 == 2d;
//   5. when exceptions_complete: the listed exceptions are exactly the
//      n < n0 with a prime term, values recomputed.
Verdict verify_certificate(const Certificate& cert,
                           const VerifyOptions& options = {});

}  // namespace checker
}  // namespace primefree

#endif  // PRIMEFREE_CHECKER_HPP
