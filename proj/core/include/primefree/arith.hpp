#ifndef PRIMEFREE_ARITH_HPP
#define PRIMEFREE_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace primefree {

// Arbitrary-precision nonnegative integer. All library quantities
// (sequence terms, powers, remainders) live here; fixed-width types are
// used only where a value is structurally small (class indices,
// exponents, witness primes).
using Natural = mpz_class;

namespace arith {

// base^exp mod modulus in O(log exp) multiplications.
// Throws std::domain_error if modulus == 0.
Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus);

// Fast path for machine-word operands; any modulus >= 1.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);

struct KthRoot {
  Natural root;  // floor(s^(1/k))
  bool exact;    // root^k == s
};

// Integer k-th root with exactness flag, k >= 1. Pure integer
// arithmetic; no floating point at any operand size.
KthRoot int_kth_root(const Natural& s, std::uint64_t k);

// Word-sized variant used in hot loops (s < 2^64).
std::pair<std::uint64_t, bool> int_kth_root(std::uint64_t s, std::uint64_t k);

// Miller-Rabin primality test. Deterministic and correct for x < 2^64
// via a fixed known-good witness set; probabilistic above with `rounds`
// bases (false => certainly composite, true => prime with error
// < 4^-rounds). Base selection above 2^64 is seeded deterministically
// so identical inputs give identical answers.
bool is_probable_prime(const Natural& x, unsigned rounds = 40);
bool is_probable_prime(std::uint64_t x);

// Legendre symbol (a|p) in {-1, 0, 1} via Euler's criterion
// a^((p-1)/2) mod p. Throws std::domain_error unless p is odd and >= 3.
// The caller is responsible for p being prime.
int legendre(const Natural& a, const Natural& p);

// All positive divisors of t, ascending. Trial division up to sqrt(t).
std::vector<std::uint64_t> divisors(std::uint64_t t);

// floor(n^t / d) computed with full-precision power and division.
// Requires t >= 2 and d >= 2.
Natural floor_pow_div(const Natural& n, std::uint64_t t, std::uint64_t d);

// Primes <= bound, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Smallest prime factor of x >= 2 by trial division.
std::uint64_t least_prime_factor(std::uint64_t x);

// Decimal digit count of floor(n_max^t / d); cheap upper-bound style
// estimate used for digit-budget gating (never underestimates by more
// than one digit).
std::uint64_t term_digits(std::uint64_t n_max, std::uint64_t t, std::uint64_t d);

}  // namespace arith
}  // namespace primefree

#endif  // PRIMEFREE_ARITH_HPP
