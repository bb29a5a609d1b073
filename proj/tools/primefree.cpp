// primefree: certify, verify, and explore eventually prime-free
// floor-power sequences from the command line. Machine output is
// line-delimited JSON on stdout; diagnostics go to stderr.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "primefree/arith.hpp"
#include "primefree/certify.hpp"
#include "primefree/checker.hpp"
#include "primefree/errors.hpp"
#include "primefree/families.hpp"
#include "primefree/scan.hpp"

namespace {

using namespace primefree;
using u64 = std::uint64_t;

constexpr int kExitUsage = 64;
constexpr int kExitLimit = 70;

struct Defaults {
  u64 witness_bound = 97;
  unsigned mr_rounds = 40;
  u64 digit_budget = 10'000;
  unsigned workers = 0;
};

// Optional key=value file; only these four knobs can change outcomes,
// everything else is fixed by the sequence definitions.
Defaults load_config(const std::string& path) {
  Defaults d;
  if (path.empty()) return d;
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos)
      throw CLI::ValidationError("--config", "line " + std::to_string(lineno) +
                                                 ": expected key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "witness_bound")
        d.witness_bound = std::stoull(value);
      else if (key == "mr_rounds")
        d.mr_rounds = static_cast<unsigned>(std::stoul(value));
      else if (key == "digit_budget")
        d.digit_budget = std::stoull(value);
      else if (key == "workers")
        d.workers = static_cast<unsigned>(std::stoul(value));
      else
        throw CLI::ValidationError("--config", "unknown key: " + key);
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--config", "bad value for " + key);
    }
  }
  return d;
}

std::string failure_json(const Pair& pair, const std::vector<u64>& uncovered) {
  nlohmann::json j;
  j["t"] = std::to_string(pair.t);
  j["d"] = std::to_string(pair.d);
  nlohmann::json list = nlohmann::json::array();
  for (u64 r : uncovered) list.push_back(std::to_string(r));
  j["uncovered"] = std::move(list);
  return j.dump();
}

std::string verdict_json(const Verdict& verdict) {
  nlohmann::json j;
  j["valid"] = verdict.valid;
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : verdict.failures) {
    nlohmann::json e;
    e["clause"] = f.clause;
    if (f.r) e["r"] = std::to_string(*f.r);
    e["detail"] = f.detail;
    failures.push_back(std::move(e));
  }
  j["failures"] = std::move(failures);
  return j.dump();
}

int run_certify(const Pair& pair, const CertifyConfig& config,
                const std::string& out_path) {
  CertifyResult result = certify::certify_pair(pair, config);
  if (const auto* failure = std::get_if<CertifyFailure>(&result)) {
    std::cout << failure_json(pair, failure->uncovered) << "\n";
    std::cerr << "certify: " << failure->uncovered.size()
              << " residue class(es) resist certification\n";
    return 3;
  }
  const auto& cert = std::get<Certificate>(result);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "certify: cannot write " << out_path << "\n";
    return 1;
  }
  out << certify::certificate_to_json(cert) << "\n";
  std::cerr << "certify: wrote certificate for (" << pair.t << ", " << pair.d
            << ") to " << out_path << "\n";
  return 0;
}

int run_verify(const std::string& path, const VerifyOptions& options) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "verify: cannot read " << path << "\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  Certificate cert;
  try {
    cert = certify::certificate_from_json(buffer.str());
  } catch (const certificate_format_error& e) {
    std::cerr << "verify: malformed certificate: " << e.what() << "\n";
    return 2;
  }
  Verdict verdict = checker::verify_certificate(cert, options);
  std::cout << verdict_json(verdict) << "\n";
  return verdict.valid ? 0 : 1;
}

int run_scan(const Pair& pair, u64 n_max, const std::string& csv_path,
             const ScanConfig& config) {
  ScanReport report;
  if (csv_path.empty()) {
    report = scan::scan_primes(pair, n_max, config);
  } else {
    std::ofstream csv(csv_path);
    if (!csv) {
      std::cerr << "scan: cannot write " << csv_path << "\n";
      return 1;
    }
    report = scan::scan_primes(pair, n_max, config, &csv);
  }
  std::cout << scan::report_to_json(report) << "\n";
  return 0;
}

int run_table1(const std::vector<u64>& rows, const CertifyConfig& config,
               const std::string& out_dir, bool include_giant) {
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  auto outcomes = scan::reproduce_table1(config, rows);
  if (include_giant) {
    // the largest q^6+q^3+1 pair; not a table row, so opt-in only. Its
    // sub-threshold scan is far past any digit budget and is skipped.
    Table1Outcome giant;
    giant.pair = Pair{87552, 262657};
    const auto started = std::chrono::steady_clock::now();
    CertifyResult result = certify::certify_pair(giant.pair, config);
    giant.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    if (auto* cert = std::get_if<Certificate>(&result)) {
      giant.certified = true;
      giant.certificate = std::move(*cert);
    } else {
      giant.uncovered = std::get<CertifyFailure>(result).uncovered;
    }
    outcomes.push_back(std::move(giant));
  }
  bool all_ok = true;
  std::map<u64, std::pair<int, int>> by_row;  // t -> (certified, total)
  for (const auto& outcome : outcomes) {
    nlohmann::json j;
    j["t"] = std::to_string(outcome.pair.t);
    j["d"] = std::to_string(outcome.pair.d);
    j["primitive"] = outcome.primitive_marked;
    j["certified"] = outcome.certified;
    j["seconds"] = outcome.seconds;
    auto& tally = by_row[outcome.pair.t];
    tally.first += outcome.certified;
    tally.second += 1;
    if (!outcome.certified) {
      all_ok = false;
      nlohmann::json list = nlohmann::json::array();
      for (u64 r : outcome.uncovered) list.push_back(std::to_string(r));
      j["uncovered"] = std::move(list);
    } else if (!out_dir.empty()) {
      const std::string name = "t" + std::to_string(outcome.pair.t) + "_d" +
                               std::to_string(outcome.pair.d) + ".json";
      std::ofstream out(std::filesystem::path(out_dir) / name);
      out << certify::certificate_to_json(*outcome.certificate) << "\n";
    }
    std::cout << j.dump() << "\n";
  }
  for (const auto& [t, tally] : by_row)
    std::cerr << "  t=" << t << ": " << tally.first << "/" << tally.second
              << " certified\n";
  std::cerr << "table1: " << outcomes.size() << " pairs, "
            << (all_ok ? "all certified" : "FAILURES present") << "\n";
  return all_ok ? 0 : 3;
}

int run_family_list(const std::vector<FamilyInstance>& instances) {
  for (const auto& inst : instances)
    std::cout << families::instance_to_json(inst) << "\n";
  return 0;
}

int run_wilson(u64 p, std::optional<u64> c, u64 max_n) {
  if (!c) {
    for (u64 value : families::wilson_params(p)) {
      FamilyInstance inst;
      inst.kind = FamilyKind::wilson;
      inst.p = p;
      inst.c = value;
      std::cout << families::instance_to_json(inst) << "\n";
    }
    return 0;
  }
  for (u64 n = 1; n <= max_n; ++n) {
    WilsonTerm term = families::wilson_term_factor(p, *c, n);
    nlohmann::json j;
    j["p"] = std::to_string(p);
    j["c"] = std::to_string(*c);
    j["n"] = std::to_string(n);
    j["q_n"] = term.q_n.get_str();
    j["factor"] = std::to_string(term.factor);
    j["degenerate"] = term.degenerate;
    std::cout << j.dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certifies floor(n^t/d) sequences as eventually prime-free"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value defaults file");

  // certify
  auto* certify_cmd =
      app.add_subcommand("certify", "build a compositeness certificate");
  Pair pair;
  std::string out_path, csv_path, cert_path, out_dir;
  u64 n_max = 0;
  std::optional<u64> witness_bound_flag;
  bool no_exceptions = false;
  certify_cmd->add_option("--t", pair.t, "exponent t >= 2")->required();
  certify_cmd->add_option("--d", pair.d, "divisor d >= 2")->required();
  certify_cmd->add_option("--witness-bound", witness_bound_flag,
                          "largest witness prime tried");
  certify_cmd->add_flag("--no-exceptions", no_exceptions,
                        "skip the sub-threshold prime scan");
  certify_cmd->add_option("--out", out_path, "certificate file")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
  verify_cmd->add_option("file", cert_path, "certificate JSON")->required();
  verify_cmd->add_option("--witness-bound", witness_bound_flag,
                         "largest admissible witness prime");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "census of prime terms");
  scan_cmd->add_option("--t", pair.t, "exponent t >= 2")->required();
  scan_cmd->add_option("--d", pair.d, "divisor d >= 2")->required();
  scan_cmd->add_option("--max-n", n_max, "scan n = 1..max-n")->required();
  scan_cmd->add_option("--csv", csv_path, "write per-n rows to this file");

  // family
  auto* family_cmd = app.add_subcommand("family", "generated families");
  family_cmd->require_subcommand(1);
  u64 family_p = 0, q_max = 0, wilson_max_n = 10;
  std::optional<u64> wilson_c;
  auto* fermat_cmd = family_cmd->add_subcommand("fermat", "(p-1, p) for odd prime p");
  fermat_cmd->add_option("--p", family_p, "odd prime")->required();
  auto* q2_cmd = family_cmd->add_subcommand("q2p1", "((p-1)/2, p) for p = q^2+1");
  q2_cmd->add_option("--q-max", q_max, "largest generator q")->required();
  auto* q6_cmd = family_cmd->add_subcommand("q6q3p1", "((p-1)/3, p) for p = q^6+q^3+1");
  q6_cmd->add_option("--q-max", q_max, "largest generator q")->required();
  auto* wilson_cmd =
      family_cmd->add_subcommand("wilson", "factorial sequence parameters/terms");
  wilson_cmd->add_option("--p", family_p, "odd prime")->required();
  wilson_cmd->add_option("--c", wilson_c, "offset; with it, emit per-term factors");
  wilson_cmd->add_option("--max-n", wilson_max_n, "terms to emit (with --c)");

  // table1
  auto* table1_cmd =
      app.add_subcommand("table1", "certify every embedded table pair");
  std::vector<u64> rows;
  bool include_giant = false;
  table1_cmd->add_option("--rows", rows, "restrict to these t values")
      ->delimiter(',');
  table1_cmd->add_flag("--no-exceptions", no_exceptions,
                       "skip sub-threshold prime scans");
  table1_cmd->add_option("--out-dir", out_dir, "write certificates here");
  table1_cmd->add_flag("--include-giant", include_giant,
                       "also certify the off-table pair (87552, 262657)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return kExitUsage;
  }

  try {
    const Defaults defaults = load_config(config_path);
    CertifyConfig certify_config;
    certify_config.witness_bound = witness_bound_flag.value_or(defaults.witness_bound);
    certify_config.scan_exceptions = !no_exceptions;
    certify_config.digit_budget = defaults.digit_budget;
    certify_config.mr_rounds = defaults.mr_rounds;
    certify_config.workers = defaults.workers;
    VerifyOptions verify_options{
        witness_bound_flag.value_or(defaults.witness_bound), defaults.digit_budget,
        defaults.mr_rounds, defaults.workers};
    ScanConfig scan_config{defaults.digit_budget, defaults.mr_rounds,
                           defaults.workers};

    if (certify_cmd->parsed()) return run_certify(pair, certify_config, out_path);
    if (verify_cmd->parsed()) return run_verify(cert_path, verify_options);
    if (scan_cmd->parsed()) return run_scan(pair, n_max, csv_path, scan_config);
    if (table1_cmd->parsed())
      return run_table1(rows, certify_config, out_dir, include_giant);
    if (fermat_cmd->parsed()) {
      Pair result = families::fermat_pair(family_p);
      FamilyInstance inst;
      inst.kind = FamilyKind::fermat;
      inst.p = family_p;
      inst.pair = result;
      return run_family_list({inst});
    }
    if (q2_cmd->parsed()) return run_family_list(families::q2plus1_pairs(q_max));
    if (q6_cmd->parsed()) return run_family_list(families::q6q3plus1_pairs(q_max));
    if (wilson_cmd->parsed()) return run_wilson(family_p, wilson_c, wilson_max_n);
    std::cerr << app.help() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const limit_error& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
