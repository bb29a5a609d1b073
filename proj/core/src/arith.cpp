#include "primefree/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace primefree::arith {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

// Witnesses proving primality for every x < 3.3 * 10^24, hence for all
// 64-bit inputs (Sorenson & Webster).
constexpr u64 kSmallWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_u64(u64 n, u64 a) {
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  a %= n;
  if (a == 0) return true;
  u64 x = mod_pow(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// One strong-pseudoprime round on an mpz operand.
bool miller_rabin_mpz(const mpz_class& n, const mpz_class& a,
                      const mpz_class& d, unsigned long s) {
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  mpz_class n1 = n - 1;
  if (x == 1 || x == n1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n1) return true;
  }
  return false;
}

const std::vector<u64>& trial_primes() {
  static const std::vector<u64> primes = primes_up_to(1000);
  return primes;
}

}  // namespace

Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus) {
  if (modulus <= 0) throw std::domain_error("mod_pow: modulus must be >= 1");
  Natural r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

u64 mod_pow(u64 base, u64 exp, u64 modulus) {
  if (modulus == 0) throw std::domain_error("mod_pow: modulus must be >= 1");
  u64 result = 1 % modulus;
  base %= modulus;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exp >>= 1;
  }
  return result;
}

KthRoot int_kth_root(const Natural& s, std::uint64_t k) {
  if (k == 0) throw std::domain_error("int_kth_root: k must be >= 1");
  KthRoot out;
  int exact = mpz_root(out.root.get_mpz_t(), s.get_mpz_t(),
                       static_cast<unsigned long>(k));
  out.exact = exact != 0;
  return out;
}

std::pair<u64, bool> int_kth_root(u64 s, u64 k) {
  if (k == 0) throw std::domain_error("int_kth_root: k must be >= 1");
  if (s < 2) return {s, true};
  if (k == 1) return {s, true};
  if (k >= 64) return {1, s == 1};
  // Float seed, then correct; the exact check is pure integer. acc stays
  // <= s before each multiply, so the 128-bit product never wraps.
  auto pow_gt = [](u64 b, u64 e, u64 limit) {
    u128 acc = 1;
    while (e--) {
      acc *= b;
      if (acc > limit) return true;
    }
    return false;
  };
  auto pow_eq = [](u64 b, u64 e, u64 target) {
    u128 acc = 1;
    while (e--) {
      acc *= b;
      if (acc > target) return false;
    }
    return acc == target;
  };
  u64 r = static_cast<u64>(std::pow(static_cast<double>(s), 1.0 / k));
  while (r > 1 && pow_gt(r, k, s)) --r;
  while (!pow_gt(r + 1, k, s)) ++r;
  return {r, pow_eq(r, k, s)};
}

bool is_probable_prime(u64 x) {
  if (x < 2) return false;
  for (u64 p : {u64(2), u64(3), u64(5), u64(7)}) {
    if (x == p) return true;
    if (x % p == 0) return false;
  }
  for (u64 a : kSmallWitnesses)
    if (!miller_rabin_u64(x, a)) return false;
  return true;
}

bool is_probable_prime(const Natural& x, unsigned rounds) {
  if (x < 2) return false;
  if (mpz_fits_ulong_p(x.get_mpz_t())) return is_probable_prime(x.get_ui());

  for (u64 p : trial_primes())
    if (mpz_divisible_ui_p(x.get_mpz_t(), p)) return x == p;

  mpz_class d = x - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  // Fixed seed keeps the test a pure function of (x, rounds).
  gmp_randstate_t rng;
  gmp_randinit_mt(rng);
  gmp_randseed_ui(rng, 0x5eed5eedUL);
  mpz_class a, span = x - 3;
  bool prime = true;
  for (unsigned i = 0; i < rounds && prime; ++i) {
    mpz_urandomm(a.get_mpz_t(), rng, span.get_mpz_t());
    a += 2;  // uniform in [2, x-2]
    prime = miller_rabin_mpz(x, a, d, s);
  }
  gmp_randclear(rng);
  return prime;
}

int legendre(const Natural& a, const Natural& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()))
    throw std::domain_error("legendre: p must be an odd prime >= 3");
  Natural r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  Natural e = (p - 1) / 2;
  Natural s = mod_pow(r, e, p);
  return s == 1 ? 1 : -1;
}

std::vector<u64> divisors(u64 t) {
  if (t == 0) throw std::domain_error("divisors: t must be >= 1");
  std::vector<u64> low, high;
  for (u64 i = 1; i * i <= t; ++i) {
    if (t % i != 0) continue;
    low.push_back(i);
    if (i != t / i) high.push_back(t / i);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

Natural floor_pow_div(const Natural& n, u64 t, u64 d) {
  if (t < 2) throw std::domain_error("floor_pow_div: t must be >= 2");
  if (d < 2) throw std::domain_error("floor_pow_div: d must be >= 2");
  Natural power;
  mpz_pow_ui(power.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(t));
  Natural q;
  mpz_fdiv_q_ui(q.get_mpz_t(), power.get_mpz_t(), static_cast<unsigned long>(d));
  return q;
}

std::vector<u64> primes_up_to(u64 bound) {
  std::vector<u64> primes;
  if (bound < 2) return primes;
  std::vector<bool> sieve(bound + 1, true);
  sieve[0] = sieve[1] = false;
  for (u64 i = 2; i * i <= bound; ++i)
    if (sieve[i])
      for (u64 j = i * i; j <= bound; j += i) sieve[j] = false;
  for (u64 i = 2; i <= bound; ++i)
    if (sieve[i]) primes.push_back(i);
  return primes;
}

u64 least_prime_factor(u64 x) {
  if (x < 2) throw std::domain_error("least_prime_factor: x must be >= 2");
  if (x % 2 == 0) return 2;
  for (u64 i = 3; i * i <= x; i += 2)
    if (x % i == 0) return i;
  return x;
}

u64 term_digits(u64 n_max, u64 t, u64 d) {
  if (n_max < 2) return 1;
  double digits = static_cast<double>(t) * std::log10(static_cast<double>(n_max))
                - std::log10(static_cast<double>(d)) + 1.0;
  return digits < 1 ? 1 : static_cast<u64>(digits);
}

}  // namespace primefree::arith
