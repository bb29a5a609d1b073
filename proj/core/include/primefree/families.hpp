#ifndef PRIMEFREE_FAMILIES_HPP
#define PRIMEFREE_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primefree/arith.hpp"
#include "primefree/certify.hpp"

namespace primefree {

enum class FamilyKind { fermat, q2plus1, q6q3plus1, wilson };

// A generated pair with its provenance parameters. The first three
// kinds name a floor-power pair; the wilson kind names a factorial
// sequence parameterized by (p, c) instead.
struct FamilyInstance {
  FamilyKind kind = FamilyKind::fermat;
  std::uint64_t p = 0;
  std::optional<std::uint64_t> q;  // generator, q2plus1/q6q3plus1 only
  std::optional<std::uint64_t> c;  // offset, wilson only
  std::optional<Pair> pair;        // absent for wilson

  friend bool operator==(const FamilyInstance&, const FamilyInstance&) = default;
};

// One term of the factorial sequence floor((p-1)!(n^2+c)/p) together
// with a verified proper factor. `degenerate` marks the tiny-n terms
// where the factor is not strictly between 1 and the term, so no
// compositeness claim is made for them.
struct WilsonTerm {
  Natural q_n;
  std::uint64_t factor = 0;
  bool degenerate = false;
};

namespace families {

// (p-1, p) for an odd prime p: every residue of n^(p-1) mod p is 0 or 1.
Pair fermat_pair(std::uint64_t p);

// Pairs ((p-1)/2, p) for primes p = q^2+1 with even q <= q_max, ascending.
std::vector<FamilyInstance> q2plus1_pairs(std::uint64_t q_max);

// Pairs ((p-1)/3, p) for primes p = q^6+q^3+1 >= 5 with q <= q_max.
std::vector<FamilyInstance> q6q3plus1_pairs(std::uint64_t q_max);

// All offsets c in 0..p-1 making -c-1 a quadratic nonresidue mod p;
// exactly (p-1)/2 of them. Throws std::domain_error unless p is an odd
// prime.
std::vector<std::uint64_t> wilson_params(std::uint64_t p);

// Evaluates one term and produces its factor: with
// r = (p-1)!(n^2+c) mod p, r = 1 is impossible by the nonresidue choice
// of c (Wilson's theorem turns r = 1 into n^2 == -c-1 mod p); r = 0
// means (p-1)! divides the term, giving factor 2; otherwise any prime
// factor of r divides the term since r | (p-1)!. Throws
// std::logic_error if r = 1 ever occurs.
WilsonTerm wilson_term_factor(std::uint64_t p, std::uint64_t c, std::uint64_t n);

// One instance per line as JSON (stable key order).
std::string instance_to_json(const FamilyInstance& inst);

}  // namespace families
}  // namespace primefree

#endif  // PRIMEFREE_FAMILIES_HPP
