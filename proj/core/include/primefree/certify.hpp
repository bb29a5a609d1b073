#ifndef PRIMEFREE_CERTIFY_HPP
#define PRIMEFREE_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "primefree/arith.hpp"

namespace primefree {

// An exponent/divisor pair naming the sequence floor(n^t / d).
struct Pair {
  std::uint64_t t = 0;
  std::uint64_t d = 0;

  bool valid() const { return t >= 2 && d >= 2; }
  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

// Evidence that every term of the class n == r (mod d) is composite for
// n >= 2d, because n^t mod d is the perfect power base^k with k | t:
// d * floor(n^t/d) = n^t - base^k then splits as a difference of k-th
// powers into two factors each exceeding d.
struct PowerFactorEvidence {
  std::uint64_t r = 0;     // class representative, 0 <= r < d
  std::uint64_t base = 0;  // base^k == s
  std::uint64_t k = 0;     // k >= 2, k | t
  std::uint64_t s = 0;     // n^t mod d for the class, 0 <= s < d

  friend bool operator==(const PowerFactorEvidence&,
                         const PowerFactorEvidence&) = default;
};

// Evidence that every term of the class n == r (mod d) is divisible by
// the prime p: floor((dq+r)^t/d) is an integer-coefficient polynomial
// in q, so its value mod p has period p in q, and all p residues were
// checked to be zero.
struct WitnessEvidence {
  std::uint64_t r = 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> checked;  // residues for q = 0..p-1, all zero

  friend bool operator==(const WitnessEvidence&, const WitnessEvidence&) = default;
};

using ClassEvidence = std::variant<PowerFactorEvidence, WitnessEvidence>;

// An index n below the threshold whose term is prime.
struct ExceptionTerm {
  std::uint64_t n = 0;
  Natural value;

  friend bool operator==(const ExceptionTerm&, const ExceptionTerm&) = default;
};

// Self-contained compositeness proof for a pair: per-class evidence for
// every residue class mod d, the threshold n0 = 2d past which every
// term is composite, and the primes found below the threshold.
struct Certificate {
  Pair pair;
  std::uint64_t class_modulus = 0;      // always == pair.d
  std::vector<ClassEvidence> evidence;  // entry i covers class r = i
  std::uint64_t n0 = 0;                 // 2 * d
  std::vector<ExceptionTerm> exceptions;
  bool exceptions_complete = false;
};

// Classes for which neither proof pattern applied within the bounds.
struct CertifyFailure {
  Pair pair;
  std::vector<std::uint64_t> uncovered;
};

using CertifyResult = std::variant<Certificate, CertifyFailure>;

inline bool certified(const CertifyResult& r) {
  return std::holds_alternative<Certificate>(r);
}

struct CertifyConfig {
  std::uint64_t witness_bound = 97;   // largest divisibility-witness prime tried
  bool scan_exceptions = true;        // enumerate primes below n0
  std::uint64_t digit_budget = 10'000;  // max decimal digits per tested term
  unsigned mr_rounds = 40;
  unsigned workers = 0;  // 0 = hardware concurrency
};

namespace certify {

// { n^t mod d : n in 0..d-1 }. Complete: n^t mod d depends only on n mod d.
std::set<Natural> residue_set(std::uint64_t t, std::uint64_t d);

// Smallest divisor k >= 2 of t for which s = r^t mod d is an exact k-th
// power, with its base. s = 0 yields base 0 and the smallest prime
// divisor of t.
std::optional<PowerFactorEvidence> power_evidence(std::uint64_t r,
                                                  std::uint64_t t,
                                                  std::uint64_t d);

// Smallest prime p <= p_bound dividing floor(n^t/d) for every n == r
// (mod d). Residues are computed mod d*p, which recovers the term mod p
// without full-precision powers; period-p polynomial structure makes the
// q = 0..p-1 check complete.
std::optional<WitnessEvidence> divisibility_witness(std::uint64_t r,
                                                    std::uint64_t t,
                                                    std::uint64_t d,
                                                    std::uint64_t p_bound);

// All n in 1..n0-1 whose term is prime. Throws limit_error if terms
// would exceed the digit budget (callers treat that as "scan skipped").
std::vector<ExceptionTerm> find_exceptions(const Pair& pair, std::uint64_t n0,
                                           const CertifyConfig& config = {});

// Classifies every residue class, preferring power evidence (smallest k)
// over witnesses (smallest p). Full coverage yields a Certificate with
// n0 = 2d and the exception list; otherwise the uncovered classes.
CertifyResult certify_pair(const Pair& pair, const CertifyConfig& config = {});

// Canonical JSON: keys sorted, every integer a decimal string. The
// encoding round-trips bit-exactly.
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

}  // namespace certify
}  // namespace primefree

#endif  // PRIMEFREE_CERTIFY_HPP
