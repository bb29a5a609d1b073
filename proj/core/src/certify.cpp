#include "primefree/certify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "primefree/errors.hpp"
#include "primefree/parallel.hpp"

namespace primefree::certify {

namespace {

using u64 = std::uint64_t;
using json = nlohmann::json;

// A divisibility witness p only proves compositeness if every term past
// the threshold exceeds p. The smallest term at n = 2d is at least
// 2^t * d^(t-1), so compare in log2 (exactly, for the tiny cases where
// the double estimate is not conclusive).
bool min_term_exceeds(u64 t, u64 d, u64 p) {
  double log2_min = static_cast<double>(t) +
                    (static_cast<double>(t) - 1.0) * std::log2(static_cast<double>(d));
  double log2_p = std::log2(static_cast<double>(p));
  if (log2_min > log2_p + 2.0) return true;
  Natural min_term;
  mpz_ui_pow_ui(min_term.get_mpz_t(), 2, static_cast<unsigned long>(t));
  Natural dp;
  mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d),
                static_cast<unsigned long>(t - 1));
  min_term *= dp;
  return min_term > p;
}

std::string dec(u64 v) { return std::to_string(v); }
std::string dec(const Natural& v) { return v.get_str(); }

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  if (s.size() > 1 && s[0] == '0') return false;  // canonical: no leading zeros
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw certificate_format_error(std::string("missing field: ") + key);
  return *it;
}

std::string get_decimal(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string() || !all_digits(v.get<std::string>()))
    throw certificate_format_error(std::string(key) + " must be a decimal string");
  return v.get<std::string>();
}

u64 parse_u64(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    u64 v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw certificate_format_error(std::string(what) + " out of range: " + s);
  }
}

u64 get_u64(const json& j, const char* key) {
  return parse_u64(get_decimal(j, key), key);
}

Natural get_natural(const json& j, const char* key) {
  return Natural(get_decimal(j, key));
}

void expect_keys(const json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw certificate_format_error("expected JSON object");
  if (j.size() != keys.size())
    throw certificate_format_error("unexpected number of fields");
  for (const char* k : keys) field(j, k);
}

}  // namespace

std::set<Natural> residue_set(u64 t, u64 d) {
  if (t < 2 || d < 2)
    throw std::domain_error("residue_set: requires t >= 2 and d >= 2");
  std::set<Natural> out;
  for (u64 n = 0; n < d; ++n)
    out.insert(Natural(static_cast<unsigned long>(arith::mod_pow(n, t, d))));
  return out;
}

std::optional<PowerFactorEvidence> power_evidence(u64 r, u64 t, u64 d) {
  if (d < 2 || r >= d)
    throw std::domain_error("power_evidence: requires 0 <= r < d");
  const u64 s = arith::mod_pow(r, t, d);
  for (u64 k : arith::divisors(t)) {
    if (k < 2) continue;
    auto [root, exact] = arith::int_kth_root(s, k);
    if (exact) return PowerFactorEvidence{r, root, k, s};
  }
  return std::nullopt;
}

std::optional<WitnessEvidence> divisibility_witness(u64 r, u64 t, u64 d,
                                                    u64 p_bound) {
  if (d < 2 || r >= d)
    throw std::domain_error("divisibility_witness: requires 0 <= r < d");
  const u64 s = arith::mod_pow(r, t, d);
  for (u64 p : arith::primes_up_to(p_bound)) {
    if (d > UINT64_MAX / p)
      throw limit_error("divisibility_witness: modulus d*p overflows at class r=" +
                        std::to_string(r));
    if (!min_term_exceeds(t, d, p)) continue;
    const u64 m = d * p;
    std::vector<u64> checked;
    checked.reserve(p);
    bool ok = true;
    for (u64 q = 0; q < p && ok; ++q) {
      // (dq+r)^t mod dp equals d*u + s with u = floor((dq+r)^t/d) mod p.
      const u64 w = arith::mod_pow(d * q + r, t, m);
      const u64 v = (w - s) / d % p;
      ok = v == 0;
      checked.push_back(v);
    }
    if (ok) return WitnessEvidence{r, p, std::move(checked)};
  }
  return std::nullopt;
}

std::vector<ExceptionTerm> find_exceptions(const Pair& pair, u64 n0,
                                           const CertifyConfig& config) {
  if (n0 < 1) throw std::domain_error("find_exceptions: n0 must be >= 1");
  if (n0 >= 2 && arith::term_digits(n0 - 1, pair.t, pair.d) > config.digit_budget)
    throw limit_error("find_exceptions: term at n=" + std::to_string(n0 - 1) +
                      " exceeds digit budget of " + std::to_string(config.digit_budget));
  return parallel_collect<ExceptionTerm>(
      1, n0, config.workers, [&](u64 n, std::vector<ExceptionTerm>& out) {
        Natural term = arith::floor_pow_div(Natural(static_cast<unsigned long>(n)),
                                            pair.t, pair.d);
        if (arith::is_probable_prime(term, config.mr_rounds))
          out.push_back({n, std::move(term)});
      });
}

CertifyResult certify_pair(const Pair& pair, const CertifyConfig& config) {
  if (!pair.valid())
    throw std::domain_error("certify_pair: requires t >= 2 and d >= 2");
  if (pair.d > (u64(1) << 31))
    throw limit_error("certify_pair: class count d=" + std::to_string(pair.d) +
                      " exceeds the supported range");

  const u64 d = pair.d;
  std::vector<std::optional<ClassEvidence>> found(d);
  // Classes are independent; workers fill disjoint slots.
  parallel_collect<char>(0, d, config.workers, [&](u64 r, std::vector<char>&) {
    if (auto power = power_evidence(r, pair.t, d)) {
      found[r] = ClassEvidence{*power};
      return;
    }
    if (auto witness = divisibility_witness(r, pair.t, d, config.witness_bound))
      found[r] = ClassEvidence{std::move(*witness)};
  });

  std::vector<u64> uncovered;
  for (u64 r = 0; r < d; ++r)
    if (!found[r]) uncovered.push_back(r);
  if (!uncovered.empty()) return CertifyFailure{pair, std::move(uncovered)};

  Certificate cert;
  cert.pair = pair;
  cert.class_modulus = d;
  cert.evidence.reserve(d);
  for (u64 r = 0; r < d; ++r) cert.evidence.push_back(std::move(*found[r]));
  cert.n0 = 2 * d;

  if (config.scan_exceptions &&
      arith::term_digits(cert.n0 - 1, pair.t, pair.d) <= config.digit_budget) {
    cert.exceptions = find_exceptions(pair, cert.n0, config);
    cert.exceptions_complete = true;
  } else {
    cert.exceptions_complete = false;
  }
  return cert;
}

std::string certificate_to_json(const Certificate& cert) {
  json j;
  j["pair"] = {{"t", dec(cert.pair.t)}, {"d", dec(cert.pair.d)}};
  j["class_modulus"] = dec(cert.class_modulus);
  json evidence = json::array();
  for (const auto& e : cert.evidence) {
    if (const auto* power = std::get_if<PowerFactorEvidence>(&e)) {
      evidence.push_back({{"type", "power"},
                          {"r", dec(power->r)},
                          {"base", dec(power->base)},
                          {"k", dec(power->k)},
                          {"s", dec(power->s)}});
    } else {
      const auto& witness = std::get<WitnessEvidence>(e);
      json checked = json::array();
      for (u64 v : witness.checked) checked.push_back(dec(v));
      evidence.push_back({{"type", "witness"},
                          {"r", dec(witness.r)},
                          {"p", dec(witness.p)},
                          {"checked", std::move(checked)}});
    }
  }
  j["evidence"] = std::move(evidence);
  j["n0"] = dec(cert.n0);
  json exceptions = json::array();
  for (const auto& ex : cert.exceptions)
    exceptions.push_back({{"n", dec(ex.n)}, {"value", dec(ex.value)}});
  j["exceptions"] = std::move(exceptions);
  j["exceptions_complete"] = cert.exceptions_complete;
  return j.dump();
}

Certificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw certificate_format_error(std::string("JSON parse failure: ") + e.what());
  }

  expect_keys(j, {"class_modulus", "evidence", "exceptions",
                  "exceptions_complete", "n0", "pair"});
  const json& pair = field(j, "pair");
  expect_keys(pair, {"d", "t"});

  Certificate cert;
  cert.pair.t = get_u64(pair, "t");
  cert.pair.d = get_u64(pair, "d");
  cert.class_modulus = get_u64(j, "class_modulus");
  cert.n0 = get_u64(j, "n0");

  const json& evidence = field(j, "evidence");
  if (!evidence.is_array())
    throw certificate_format_error("evidence must be an array");
  for (const json& e : evidence) {
    const json& type = field(e, "type");
    if (type == "power") {
      expect_keys(e, {"base", "k", "r", "s", "type"});
      cert.evidence.push_back(PowerFactorEvidence{
          get_u64(e, "r"), get_u64(e, "base"), get_u64(e, "k"), get_u64(e, "s")});
    } else if (type == "witness") {
      expect_keys(e, {"checked", "p", "r", "type"});
      WitnessEvidence w;
      w.r = get_u64(e, "r");
      w.p = get_u64(e, "p");
      const json& checked = field(e, "checked");
      if (!checked.is_array())
        throw certificate_format_error("checked must be an array");
      for (const json& v : checked) {
        if (!v.is_string() || !all_digits(v.get<std::string>()))
          throw certificate_format_error("checked entries must be decimal strings");
        w.checked.push_back(parse_u64(v.get<std::string>(), "checked"));
      }
      cert.evidence.push_back(std::move(w));
    } else {
      throw certificate_format_error("unknown evidence type");
    }
  }

  const json& exceptions = field(j, "exceptions");
  if (!exceptions.is_array())
    throw certificate_format_error("exceptions must be an array");
  for (const json& ex : exceptions) {
    expect_keys(ex, {"n", "value"});
    cert.exceptions.push_back({get_u64(ex, "n"), get_natural(ex, "value")});
  }

  const json& complete = field(j, "exceptions_complete");
  if (!complete.is_boolean())
    throw certificate_format_error("exceptions_complete must be a boolean");
  cert.exceptions_complete = complete.get<bool>();
  return cert;
}

}  // namespace primefree::certify
