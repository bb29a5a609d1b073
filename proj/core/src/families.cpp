#include "primefree/families.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "json.hpp"

namespace primefree::families {

namespace {

using u64 = std::uint64_t;

void require_odd_prime(u64 p, const char* who) {
  if (p < 3 || p % 2 == 0 || !arith::is_probable_prime(p))
    throw std::domain_error(std::string(who) + ": p=" + std::to_string(p) +
                            " is not an odd prime");
}

const Natural& cached_factorial(u64 p) {
  static std::mutex mutex;
  static std::map<u64, Natural> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(p);
  if (it == cache.end()) {
    Natural f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p - 1));
    it = cache.emplace(p, std::move(f)).first;
  }
  return it->second;
}

}  // namespace

Pair fermat_pair(u64 p) {
  require_odd_prime(p, "fermat_pair");
  return Pair{p - 1, p};
}

std::vector<FamilyInstance> q2plus1_pairs(u64 q_max) {
  if (q_max < 2) throw std::domain_error("q2plus1_pairs: q_max must be >= 2");
  std::vector<FamilyInstance> out;
  for (u64 q = 2; q <= q_max; q += 2) {
    const u64 p = q * q + 1;
    if (!arith::is_probable_prime(p)) continue;
    FamilyInstance inst;
    inst.kind = FamilyKind::q2plus1;
    inst.p = p;
    inst.q = q;
    inst.pair = Pair{(p - 1) / 2, p};
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<FamilyInstance> q6q3plus1_pairs(u64 q_max) {
  if (q_max < 2) throw std::domain_error("q6q3plus1_pairs: q_max must be >= 2");
  std::vector<FamilyInstance> out;
  for (u64 q = 1; q <= q_max; ++q) {
    Natural p_big;
    mpz_ui_pow_ui(p_big.get_mpz_t(), static_cast<unsigned long>(q), 6);
    Natural cube;
    mpz_ui_pow_ui(cube.get_mpz_t(), static_cast<unsigned long>(q), 3);
    p_big += cube + 1;
    if (p_big < 5 || !arith::is_probable_prime(p_big)) continue;
    if (!mpz_fits_ulong_p(p_big.get_mpz_t()))
      throw std::domain_error("q6q3plus1_pairs: p overflows at q=" + std::to_string(q));
    const u64 p = p_big.get_ui();
    FamilyInstance inst;
    inst.kind = FamilyKind::q6q3plus1;
    inst.p = p;
    inst.q = q;
    inst.pair = Pair{(p - 1) / 3, p};
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<u64> wilson_params(u64 p) {
  require_odd_prime(p, "wilson_params");
  std::vector<u64> out;
  const Natural pm(static_cast<unsigned long>(p));
  for (u64 c = 0; c < p; ++c) {
    // -c-1 reduced into 0..p-1
    const u64 a = (2 * p - c - 1) % p;
    if (arith::legendre(Natural(static_cast<unsigned long>(a)), pm) == -1)
      out.push_back(c);
  }
  return out;
}

WilsonTerm wilson_term_factor(u64 p, u64 c, u64 n) {
  require_odd_prime(p, "wilson_term_factor");
  if (c >= p)
    throw std::domain_error("wilson_term_factor: c must lie in 0..p-1");
  if (n < 1) throw std::domain_error("wilson_term_factor: n must be >= 1");

  const Natural& factorial = cached_factorial(p);
  Natural numerator = factorial * (Natural(static_cast<unsigned long>(n)) *
                                       static_cast<unsigned long>(n) +
                                   static_cast<unsigned long>(c));
  WilsonTerm term;
  Natural remainder;
  mpz_fdiv_qr_ui(term.q_n.get_mpz_t(), remainder.get_mpz_t(),
                 numerator.get_mpz_t(), static_cast<unsigned long>(p));
  const u64 r = remainder.get_ui();

  if (r == 1)
    throw std::logic_error(
        "wilson_term_factor: remainder 1 contradicts the nonresidue choice of c");

  term.factor = r == 0 ? 2 : arith::least_prime_factor(r);
  if (!mpz_divisible_ui_p(term.q_n.get_mpz_t(),
                          static_cast<unsigned long>(term.factor)))
    throw std::logic_error("wilson_term_factor: derived factor fails to divide the term");
  term.degenerate = term.q_n <= term.factor;
  return term;
}

std::string instance_to_json(const FamilyInstance& inst) {
  nlohmann::json j;
  switch (inst.kind) {
    case FamilyKind::fermat: j["kind"] = "fermat"; break;
    case FamilyKind::q2plus1: j["kind"] = "q2p1"; break;
    case FamilyKind::q6q3plus1: j["kind"] = "q6q3p1"; break;
    case FamilyKind::wilson: j["kind"] = "wilson"; break;
  }
  j["p"] = std::to_string(inst.p);
  if (inst.q) j["q"] = std::to_string(*inst.q);
  if (inst.c) j["c"] = std::to_string(*inst.c);
  if (inst.pair)
    j["pair"] = {{"t", std::to_string(inst.pair->t)},
                 {"d", std::to_string(inst.pair->d)}};
  return j.dump();
}

}  // namespace primefree::families
