// bmverify: Boros-Moll rows, Q/R polynomials and exact verification sweeps.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage or I/O error.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bmpoly/boros_moll.hpp"
#include "bmpoly/report_io.hpp"
#include "bmpoly/row_cache.hpp"
#include "bmpoly/verification.hpp"

namespace {

using namespace bmpoly;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

constexpr const char* kCacheEnv = "BMPOLY_CACHE";

struct Config {
  std::optional<unsigned> n;
  unsigned n_max = 40;
  unsigned k = 3;
  std::string family;
  std::string method = "closed";
  bool cross_check = false;
  bool via_recurrence = false;
  std::string format = "text";
  std::string cache_path;
  std::string out_path;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  unsigned trials = 200;
  unsigned max_deg = 12;
  std::string claim;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OutputFormat format_of(const Config& cfg) {
  auto f = parse_format(cfg.format);
  if (!f) throw UsageError("unknown format '" + cfg.format + "'");
  return *f;
}

std::optional<FamilyId> family_of(const Config& cfg) {
  if (cfg.family.empty()) return std::nullopt;
  auto f = parse_family(cfg.family);
  if (!f) throw UsageError("unknown family '" + cfg.family + "' (expected q or r)");
  return f;
}

std::string cache_path_of(const Config& cfg) {
  if (!cfg.cache_path.empty()) return cfg.cache_path;
  if (const char* env = std::getenv(kCacheEnv)) return env;
  return {};
}

// Loads the row cache if configured; returns the path so rows can be appended.
std::string prepare_cache(const Config& cfg, RowCache& cache) {
  const std::string path = cache_path_of(cfg);
  if (!path.empty()) cache.load(path);
  return path;
}

void persist_cache(const std::string& path, const RowCache& cache) {
  if (!path.empty()) cache.save(path);
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + cfg.out_path);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("cannot write " + cfg.out_path);
}

int cmd_coeffs(const Config& cfg) {
  const auto method = parse_row_method(cfg.method);
  if (!method) throw UsageError("unknown method '" + cfg.method + "'");
  const OutputFormat format = format_of(cfg);
  const unsigned lo = cfg.n ? *cfg.n : 0;
  const unsigned hi = cfg.n ? *cfg.n : cfg.n_max;

  RowCache cache;
  const std::string cache_path = prepare_cache(cfg, cache);
  std::vector<BMRow> rows;
  if (*method == RowMethod::closed && !cache_path.empty()) {
    for (unsigned n = lo; n <= hi; ++n) rows.push_back(cache.row(n));
  } else {
    auto all = *method == RowMethod::closed || *method == RowMethod::double_sum
                   ? std::vector<BMRow>{}
                   : bm_rows(*method, hi);
    for (unsigned n = lo; n <= hi; ++n) rows.push_back(all.empty() ? bm_row(*method, n) : all[n]);
  }

  int status = kExitPass;
  if (cfg.cross_check) {
    const auto rec1 = bm_rows(RowMethod::rec1, hi);
    const auto rec2 = bm_rows(RowMethod::rec2, hi);
    for (unsigned n = lo; n <= hi; ++n) {
      const BMRow closed = bm_row_closed(n);
      const BMRow dsum = bm_row_double_sum(n);
      if (!(closed == dsum && closed == rec1[n] && closed == rec2[n])) {
        std::cerr << "route disagreement at n=" << n << "\n";
        status = kExitFail;
      }
    }
  }
  for (const auto& row : rows) cache.insert(row);
  persist_cache(cache_path, cache);
  emit(cfg, format_rows(rows, format));
  return status;
}

int cmd_poly(const Config& cfg) {
  const auto family = family_of(cfg);
  if (!family) throw UsageError("poly needs --family q|r");
  if (!cfg.n) throw UsageError("poly needs --n");
  const Poly p = cfg.via_recurrence ? family_polynomials_rec(*family, *cfg.n).back() : family_polynomial(*family, *cfg.n);
  emit(cfg, p.str() + "\n");
  return kExitPass;
}

int finish_reports(const Config& cfg, const std::vector<VerificationReport>& reports) {
  emit(cfg, format_reports(reports, format_of(cfg)));
  for (const auto& r : reports) {
    if (!r.passed()) return kExitFail;
  }
  return kExitPass;
}

int cmd_verify(const Config& cfg) {
  format_of(cfg);
  const auto family = family_of(cfg);
  RowCache cache;
  const std::string cache_path = prepare_cache(cfg, cache);
  const VerifyOptions opts{&cache, cfg.jobs};

  std::vector<VerificationReport> reports;
  const std::string& c = cfg.claim;
  if (c == "identities") {
    reports.push_back(verify_coefficient_identities(cfg.n_max, opts));
  } else if (c == "recurrences") {
    reports.push_back(verify_polynomial_recurrences(cfg.n_max, opts));
  } else if (c == "liu-wang") {
    reports.push_back(verify_liu_wang(cfg.n_max, family, opts));
  } else if (c == "sturm") {
    if (family) {
      reports.push_back(verify_sturm_sequence(*family, cfg.n_max, opts));
    } else {
      reports.push_back(verify_sturm_sequence(FamilyId::Q, cfg.n_max, opts));
      reports.push_back(verify_sturm_sequence(FamilyId::R, cfg.n_max, opts));
    }
  } else if (c == "klogconcave") {
    reports.push_back(verify_k_logconcavity(cfg.n_max, cfg.k, opts));
  } else if (c == "branden") {
    reports.push_back(branden_random_property(cfg.trials, cfg.max_deg, cfg.seed, opts));
  } else {
    throw UsageError("unknown claim '" + c + "'");
  }
  persist_cache(cache_path, cache);
  return finish_reports(cfg, reports);
}

int cmd_report(const Config& cfg) {
  format_of(cfg);
  if (!cfg.out_path.empty()) {
    // fail early on an unwritable destination, before the long run
    std::ofstream probe(cfg.out_path, std::ios::app);
    if (!probe) throw std::runtime_error("cannot write " + cfg.out_path);
  }
  RowCache cache;
  const std::string cache_path = prepare_cache(cfg, cache);
  const ReportConfig rc{cfg.n_max, cfg.k, cfg.trials, cfg.max_deg, cfg.seed};
  const auto reports = run_all_claims(rc, VerifyOptions{&cache, cfg.jobs});
  persist_cache(cache_path, cache);
  return finish_reports(cfg, reports);
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--cache", cfg.cache_path, std::string("Row cache file (default: $") + kCacheEnv + ")");
  sub->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
}

void add_verify_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--n-max", cfg.n_max, "Largest n to check")->capture_default_str();
  sub->add_option("--k", cfg.k, "Log-concavity depth")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--seed", cfg.seed, "Seed for randomized claims")->capture_default_str();
  sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--trials", cfg.trials, "Samples for the L-transform property")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--max-deg", cfg.max_deg, "Largest sample degree for the L-transform property")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int run(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Exact Boros-Moll coefficients, Q_n/R_n polynomials and verification sweeps"};
  app.require_subcommand(1);

  auto* coeffs = app.add_subcommand("coeffs", "Print Boros-Moll coefficient rows");
  auto* n_opt = coeffs->add_option("--n", cfg.n, "Single row index");
  coeffs->add_option("--n-max", cfg.n_max, "Print rows 0..n-max")->excludes(n_opt);
  coeffs->add_option("--method", cfg.method, "Row route")
      ->check(CLI::IsMember({"closed", "double-sum", "rec1", "rec2"}))
      ->capture_default_str();
  coeffs->add_flag("--cross-check", cfg.cross_check, "Require all four routes to agree");
  add_common(coeffs, cfg);

  auto* poly = app.add_subcommand("poly", "Print Q_n or R_n as a coefficient list");
  poly->add_option("--n", cfg.n, "Index")->required();
  poly->add_option("--family", cfg.family, "q or r")->required()->check(CLI::IsMember({"q", "r", "Q", "R"}));
  poly->add_flag("--via-recurrence", cfg.via_recurrence, "Build through the three-term recurrence");
  add_common(poly, cfg);

  auto* verify = app.add_subcommand("verify", "Check one claim over 0..n-max");
  verify->add_option("claim", cfg.claim, "identities | recurrences | liu-wang | sturm | klogconcave | branden")
      ->required()
      ->check(CLI::IsMember({"identities", "recurrences", "liu-wang", "sturm", "klogconcave", "branden"}));
  verify->add_option("--family", cfg.family, "q or r")->check(CLI::IsMember({"q", "r", "Q", "R"}));
  add_verify_options(verify, cfg);
  add_common(verify, cfg);

  auto* report = app.add_subcommand("report", "Run every claim and write one consolidated report");
  add_verify_options(report, cfg);
  add_common(report, cfg);
  cfg.format = "text";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  if (report->parsed() && cfg.format == "text" && report->count("--format") == 0) cfg.format = "json";

  try {
    if (coeffs->parsed()) return cmd_coeffs(cfg);
    if (poly->parsed()) return cmd_poly(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (report->parsed()) return cmd_report(cfg);
  } catch (const UsageError& e) {
    std::cerr << "bmverify: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "bmverify: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
