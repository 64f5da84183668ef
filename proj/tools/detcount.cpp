// detcount: exact counters, decomposition diagnostics and sweep harness for
// 2x2 integer determinant counts with entries in [-N, N].
//
// Subcommands:
//   count   one (h, N) cell, printed as a JSON record, optionally cached
//   sweep   grid run from a JSON config with resume and regime report
//   verify  lemma / identity suites with per-suite pass counts
//   export  plot-ready CSV from a JSON-lines cache
//   fit     error-exponent fit straight from a cache
//
// Exit codes: 0 success, 1 verification or threshold failure,
//             2 usage / configuration / capacity error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "detcount/decomposition.hpp"
#include "detcount/harness/cache.hpp"
#include "detcount/harness/config.hpp"
#include "detcount/harness/export.hpp"
#include "detcount/harness/records.hpp"
#include "detcount/harness/suites.hpp"
#include "detcount/harness/sweep.hpp"

namespace {

using namespace detcount;

int cmd_count(i64 h, i64 N, const std::string& method, const std::string& out_path) {
  counting::AutoCounter counter;
  counting::CountResult result;
  if (method == "t_tilde") {
    auto start = std::chrono::steady_clock::now();
    i64 value = decomposition::t_tilde(h, N);
    result = {h, N, counting::Method::t_tilde, value,
              std::chrono::duration_cast<std::chrono::nanoseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count()};
  } else if (method == "auto") {
    result = counter.count(h, N);
  } else {
    auto m = counting::parse_method(method);
    if (!m) {
      std::cerr << "unknown method '" << method << "'\n";
      return 2;
    }
    result = counter.count(h, N, *m);
  }
  harness::ResultRecord record = harness::make_record(result, harness::utc_timestamp_now());
  std::cout << harness::to_json_line(record) << "\n";
  if (!out_path.empty()) harness::append_cache(out_path, {record});
  return 0;
}

int cmd_sweep(const std::string& config_path, const harness::ConfigOverrides& overrides) {
  harness::SweepConfig config = harness::load_config(config_path);
  harness::apply_overrides(config, overrides);
  harness::SweepOutcome outcome = harness::run_sweep(config);
  std::cerr << "sweep: " << outcome.computed << " computed, " << outcome.reused
            << " reused, " << outcome.failed << " failed\n";
  if (config.regime != "custom") {
    std::cout << harness::report_to_json(outcome.report, outcome.degraded()) << "\n";
    if (!outcome.report.pass) return 1;
  }
  return outcome.degraded() ? 1 : 0;
}

void print_suite(const harness::suites::SuiteCheck& check) {
  std::printf("%-28s %8lld checks  %s", check.name.c_str(), check.checked,
              check.ok() ? "ok" : "FAIL");
  for (const auto& [key, value] : check.metrics) std::printf("  %s=%.6g", key.c_str(), value);
  if (!check.ok()) std::printf("  first violation: %s", check.first_violation.c_str());
  std::printf("\n");
}

int cmd_verify(const std::string& suite, u64 seed) {
  std::vector<harness::suites::SuiteCheck> checks;
  if (suite == "lemmas" || suite == "all") {
    auto lemmas = harness::suites::run_lemma_suites(seed);
    checks.insert(checks.end(), lemmas.begin(), lemmas.end());
  }
  if (suite == "identities" || suite == "all") {
    auto identities = harness::suites::run_identity_suites(seed);
    checks.insert(checks.end(), identities.begin(), identities.end());
  }
  if (checks.empty()) {
    std::cerr << "unknown suite '" << suite << "' (lemmas | identities | all)\n";
    return 2;
  }
  bool all_ok = true;
  for (const auto& check : checks) {
    print_suite(check);
    all_ok = all_ok && check.ok();
  }
  return all_ok ? 0 : 1;
}

int cmd_export(const std::string& cache_path, const std::string& out_prefix,
               const std::string& format) {
  if (format != "csv") {
    std::cerr << "unsupported format '" << format << "'\n";
    return 2;
  }
  std::ifstream probe(cache_path);
  if (!probe) {
    std::cerr << "missing cache " << cache_path << "\n";
    return 2;
  }
  probe.close();
  auto records = harness::load_cache(cache_path);
  for (const auto& path : harness::export_csv(records, out_prefix)) {
    std::cerr << "wrote " << path << "\n";
  }
  return 0;
}

int cmd_fit(const std::string& cache_path, const std::string& regime,
            const std::string& out_path) {
  if (regime != "mt1" && regime != "mt2") {
    std::cerr << "fit regime must be mt1 or mt2\n";
    return 2;
  }
  std::ifstream probe(cache_path);
  if (!probe) {
    std::cerr << "missing cache " << cache_path << "\n";
    return 2;
  }
  probe.close();
  auto records = harness::load_cache(cache_path);
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : records) {
    double value = regime == "mt1"
                       ? std::abs(r.e1) / static_cast<double>(r.h + r.N)
                       : std::abs(r.e2) /
                             static_cast<double>(r.N + std::abs(r.h - r.N * r.N) + 1);
    pts.emplace_back(static_cast<double>(r.N), value);
  }
  auto fit = asymptotics::fit_exponent(pts);
  nlohmann::ordered_json j;
  j["regime"] = regime;
  j["alpha"] = fit.alpha;
  j["C"] = fit.C;
  j["used"] = fit.used;
  j["dropped"] = fit.dropped;
  std::string text = j.dump(2);
  std::cout << text << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << text << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact determinant-count toolkit"};
  app.set_help_flag("--help", "print help");  // keeps --h free for the determinant
  app.require_subcommand(1);

  i64 h = 0, N = 1;
  std::string method = "auto";
  std::string out_path;
  std::string config_path;
  std::string cache_path;
  std::string suite = "all";
  std::string format = "csv";
  std::string regime = "mt1";
  int workers = 0;
  u64 seed = 0;
  bool seed_given = false, workers_given = false;

  auto* count = app.add_subcommand("count", "count one (h, N) cell");
  count->set_help_flag("--help", "print help");
  count->add_option("--h", h, "determinant")->required();
  count->add_option("--N", N, "entry bound")->required();
  count->add_option("--method", method, "naive|hyperbola|linear|t_tilde|auto");
  count->add_option("--out", out_path, "append the record to this cache");

  auto* sweep = app.add_subcommand("sweep", "run a grid from a JSON config");
  sweep->add_option("--config", config_path, "sweep config JSON")->required();
  sweep->add_option("--out", out_path, "report path override");
  sweep->add_option("--cache", cache_path, "cache path override");
  sweep->add_option("--workers", workers, "worker pool size")->each([&](const std::string&) {
    workers_given = true;
  });
  sweep->add_option("--seed", seed, "rng seed override")->each([&](const std::string&) {
    seed_given = true;
  });

  auto* verify = app.add_subcommand("verify", "run lemma / identity suites");
  verify->add_option("--suite", suite, "lemmas|identities|all");
  verify->add_option("--seed", seed, "suite rng seed");

  auto* exp = app.add_subcommand("export", "cache to plot-ready CSV");
  exp->add_option("--cache", cache_path, "JSON-lines cache")->required();
  exp->add_option("--out", out_path, "output prefix")->required();
  exp->add_option("--format", format, "csv");

  auto* fit = app.add_subcommand("fit", "error-exponent fit from a cache");
  fit->add_option("--cache", cache_path, "JSON-lines cache")->required();
  fit->add_option("--regime", regime, "mt1|mt2");
  fit->add_option("--out", out_path, "also write the fit JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count->parsed()) return cmd_count(h, N, method, out_path);
    if (sweep->parsed()) {
      harness::ConfigOverrides overrides;
      if (!out_path.empty()) overrides.report_path = out_path;
      if (!cache_path.empty()) overrides.cache_path = cache_path;
      if (workers_given) overrides.workers = workers;
      if (seed_given) overrides.seed = seed;
      return cmd_sweep(config_path, overrides);
    }
    if (verify->parsed()) return cmd_verify(suite, seed);
    if (exp->parsed()) return cmd_export(cache_path, out_path, format);
    if (fit->parsed()) return cmd_fit(cache_path, regime, out_path);
  } catch (const harness::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const harness::CacheError& e) {
    std::cerr << "cache error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const InsufficientDataError& e) {
    std::cerr << "fit error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
