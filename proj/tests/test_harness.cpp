#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "detcount/decomposition.hpp"
#include "detcount/harness/cache.hpp"
#include "detcount/harness/config.hpp"
#include "detcount/harness/export.hpp"
#include "detcount/harness/records.hpp"
#include "detcount/harness/suites.hpp"
#include "detcount/harness/sweep.hpp"

using namespace detcount;
using namespace detcount::harness;

namespace {

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() /
             ("detcount_test_" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string strip_timing(std::string text) {
  text = std::regex_replace(text, std::regex("\"elapsed_ns\":[0-9]+"), "\"elapsed_ns\":0");
  text = std::regex_replace(text, std::regex("\"timestamp\":\"[^\"]*\""), "\"timestamp\":\"\"");
  return text;
}

}  // namespace

TEST_CASE("record json round trip") {
  counting::CountResult result{7, 2, counting::Method::naive, 0, 1234};
  ResultRecord r = make_record(result, "2026-01-02T03:04:05Z");
  CHECK(r.sigma == "3/2");
  std::string line = to_json_line(r);
  ResultRecord back = parse_record(line);
  CHECK(back == r);
  CHECK_THROWS_AS(parse_record("{\"h\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_record("not json"), std::invalid_argument);

  // negative h records take the mirrored divisor sum
  counting::CountResult neg{-7, 2, counting::Method::naive, 0, 1234};
  ResultRecord rn = make_record(neg, "2026-01-02T03:04:05Z");
  CHECK(rn.mt1 == r.mt1);
  CHECK(rn.sigma == "-11/2");
}

TEST_CASE("cache load reports corrupt line numbers") {
  auto dir = temp_dir();
  auto path = (dir / "cache.jsonl").string();
  counting::CountResult result{1, 1, counting::Method::naive, 20, 99};
  ResultRecord r = make_record(result, utc_timestamp_now());
  append_cache(path, {r, r});
  {
    std::ofstream out(path, std::ios::app);
    out << "{\"broken\": true}\n";
  }
  try {
    load_cache(path);
    FAIL("expected CacheError");
  } catch (const CacheError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(load_cache((dir / "absent.jsonl").string()).empty());
  std::filesystem::remove_all(dir);
}

TEST_CASE("config parsing, defaults and overrides") {
  SweepConfig cfg = parse_config(R"({
    "regime": "mt1",
    "grid": {"N": [32, 64, 128]},
    "h_rules": [{"kind": "constant", "value": 3}, {"kind": "proportional", "ratio": 0.5}],
    "workers": 2,
    "seed": 9,
    "cache": "c.jsonl",
    "report": "r.json"
  })");
  CHECK(cfg.Ns == std::vector<i64>{32, 64, 128});
  CHECK(cfg.h_rules.size() == 2);
  CHECK(cfg.h_rules[1].h_for(64) == 32);
  CHECK(cfg.workers == 2);

  ConfigOverrides ov;
  ov.cache_path = "other.jsonl";
  ov.workers = 4;
  apply_overrides(cfg, ov);
  CHECK(cfg.cache_path == "other.jsonl");
  CHECK(cfg.report_path == "r.json");
  CHECK(cfg.workers == 4);

  auto cells = expand_grid(cfg);
  CHECK(cells.size() == 6);
  CHECK(cells.front().N == 32);

  // defaults per regime
  SweepConfig mt2 = parse_config(R"({"regime": "mt2"})");
  CHECK(mt2.Ns == std::vector<i64>{250, 500, 1000, 2000, 4000});
  CHECK(mt2.h_rules.size() == 1);
  auto mt2_cells = expand_grid(mt2);
  bool has_square = false;
  for (const auto& c : mt2_cells) has_square = has_square || (c.N == 500 && c.h == 250000);
  CHECK(has_square);

  SweepConfig geo = parse_config(R"({
    "regime": "custom",
    "grid": {"N_geometric": {"from": 100, "to": 400, "factor": 2}},
    "h_rules": [{"kind": "power", "delta": 0.5}]
  })");
  CHECK(geo.Ns == std::vector<i64>{100, 200, 400});
  CHECK(geo.h_rules[0].h_for(100) == 1000);

  // h-rule edges: clamping and the minimum of 1
  HRule power{HRule::Kind::power, 1.0};
  CHECK(power.h_for(10) == 100);
  HRule hot{HRule::Kind::power, 5.0};
  CHECK(hot.h_for(10) == 200);  // clamped to 2N^2
  HRule tiny{HRule::Kind::proportional, 0.001};
  CHECK(tiny.h_for(10) == 1);
  HRule off{HRule::Kind::square_offset, 0.5};
  CHECK(off.h_for(10) == 105);

  CHECK_THROWS_AS(parse_config("{nope"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"regime": "bogus"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"regime": "custom"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"regime": "mt1", "workers": 0})"), ConfigError);
  CHECK_THROWS_AS(
      parse_config(R"({"regime": "mt1", "grid": {"N": [50]}, "caps": {"naive": 1, "hyperbola": 2, "linear": 3}})"),
      ConfigError);
}

TEST_CASE("sweep runs, resumes, and stays deterministic") {
  auto dir = temp_dir();
  auto mkcfg = [&](const std::string& cache, const std::string& report) {
    SweepConfig cfg = parse_config(R"({
      "regime": "mt1",
      "grid": {"N": [16, 24, 32, 48]},
      "h_rules": [{"kind": "constant", "value": 1}, {"kind": "constant", "value": 5}],
      "workers": 3
    })");
    cfg.cache_path = (dir / cache).string();
    cfg.report_path = (dir / report).string();
    return cfg;
  };

  auto cfg = mkcfg("a.jsonl", "a.json");
  SweepOutcome first = run_sweep(cfg);
  CHECK(first.computed == 8);
  CHECK(first.reused == 0);
  CHECK(first.failed == 0);
  CHECK(first.records.size() == 8);
  CHECK(std::filesystem::exists(cfg.report_path));

  SweepOutcome second = run_sweep(cfg);
  CHECK(second.computed == 0);
  CHECK(second.reused == 8);
  CHECK(second.records.size() == 8);

  // deterministic cache bytes modulo timing fields
  auto cfg_b = mkcfg("b.jsonl", "b.json");
  run_sweep(cfg_b);
  CHECK(strip_timing(read_file(cfg.cache_path)) == strip_timing(read_file(cfg_b.cache_path)));

  // records arrive sorted by (N, h)
  auto records = load_cache(cfg.cache_path);
  for (size_t i = 1; i < records.size(); ++i) {
    REQUIRE(std::tuple(records[i - 1].N, records[i - 1].h) <=
            std::tuple(records[i].N, records[i].h));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("sweep exactness matches direct counting") {
  auto dir = temp_dir();
  SweepConfig cfg = parse_config(R"({
    "regime": "custom",
    "grid": {"N": [6, 9]},
    "h_rules": [{"kind": "constant", "value": 2}, {"kind": "square_offset", "scale": 0}]
  })");
  cfg.cache_path = (dir / "c.jsonl").string();
  cfg.report_path.clear();
  auto outcome = run_sweep(cfg);
  REQUIRE(outcome.records.size() == 4);
  for (const auto& r : outcome.records) {
    REQUIRE(r.count == counting::count_linear(r.h, r.N).count);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("sweep marks out-of-cap cells as failures") {
  auto dir = temp_dir();
  SweepConfig cfg = parse_config(R"({
    "regime": "custom",
    "grid": {"N": [16, 24, 50]},
    "h_rules": [{"kind": "constant", "value": 1}],
    "caps": {"naive": 15, "hyperbola": 30, "linear": 40}
  })");
  cfg.cache_path = (dir / "c.jsonl").string();
  cfg.report_path.clear();
  auto outcome = run_sweep(cfg);
  CHECK(outcome.computed == 2);
  CHECK(outcome.failed == 1);
  CHECK(outcome.degraded());
  REQUIRE(outcome.report.notes.size() == 1);
  CHECK(outcome.report.notes[0].find("N=50") != std::string::npos);
  // failed cells never reach the cache
  CHECK(load_cache(cfg.cache_path).size() == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("sweep with the progression approximant method") {
  auto dir = temp_dir();
  SweepConfig cfg = parse_config(R"({
    "regime": "custom",
    "method": "t_tilde",
    "grid": {"N": [8, 13]},
    "h_rules": [{"kind": "constant", "value": 3}, {"kind": "constant", "value": 20}]
  })");
  cfg.cache_path = (dir / "t.jsonl").string();
  cfg.report_path.clear();
  auto outcome = run_sweep(cfg);
  REQUIRE(outcome.records.size() == 4);
  for (const auto& r : outcome.records) {
    CHECK(r.method == "t_tilde");
    CHECK(r.count == decomposition::t_tilde(r.h, r.N));
  }
  // an exact sweep over the same grid does not reuse approximant records
  cfg.method = "auto";
  auto exact = run_sweep(cfg);
  CHECK(exact.computed == 4);
  CHECK(exact.reused == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("csv export") {
  auto dir = temp_dir();
  counting::AutoCounter counter;
  std::vector<ResultRecord> records;
  for (i64 N : {i64{5}, i64{9}}) {
    for (i64 h : {i64{1}, N * N}) {
      records.push_back(make_record(counter.count(h, N), utc_timestamp_now()));
    }
  }
  auto paths = export_csv(records, (dir / "out").string());
  REQUIRE(paths.size() == 2);
  for (const auto& p : paths) {
    std::ifstream in(p);
    std::string header;
    std::getline(in, header);
    CHECK(header.find("N,h,T,MT,E,normalizer,ratio,sigma") == 0);
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) ++rows;
    }
    CHECK(rows == static_cast<int>(records.size()));
  }
  // normalizer contract and sigma round trip on the near-square file
  std::ifstream in(paths[1]);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);  // first record: h=1, N=5
  std::stringstream ss(line);
  std::string field;
  std::vector<std::string> fields;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  REQUIRE(fields.size() == 8);
  CHECK(fields[5] == std::to_string(5 + std::abs(1 - 25) + 1));
  Rational sigma = Rational::parse(fields[7]);
  CHECK(sigma == Rational(1 - 25, 5));

  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  std::filesystem::remove_all(dir);
}

TEST_CASE("solution line validator catches the zero-based b0 mutation") {
  using decomposition::SolutionLine;
  int caught = 0, cases = 0;
  for (i64 m = 2; m <= 60; ++m) {
    for (i64 y = 1; y <= 6; ++y) {
      if (m % y != 0) continue;  // b0 == y exactly when y | m
      for (i64 x = 1; x <= 6; ++x) {
        if (std::gcd(x, y) != 1) continue;
        auto good = decomposition::solution_line(x, y, m, 10);
        REQUIRE(good.b0 == y);
        REQUIRE_FALSE(suites::validate_solution_line(good).has_value());
        SolutionLine broken = good;  // the off-by-one convention b0 in [0, y)
        broken.b0 = 0;
        broken.d0 = m / y;
        broken.lower = max(Rational(1 - broken.b0, y), Rational(broken.d0 - 10, x));
        broken.upper = min(Rational(10 - broken.b0, y), Rational(broken.d0 - 1, x));
        ++cases;
        if (suites::validate_solution_line(broken).has_value()) ++caught;
      }
    }
  }
  CHECK(cases > 0);
  CHECK(caught == cases);
}

TEST_CASE("suite smoke runs at reduced scale") {
  auto check = suites::coprime_residue_identity(80, 4, 1);
  CHECK(check.ok());
  CHECK(check.checked > 0);
  auto cong = suites::unit_congruence_bound(60, 4, 1);
  CHECK(cong.ok());
  auto ram = suites::ramanujan_identity(40, 40);
  CHECK(ram.ok());
  auto range = suites::coprime_range_error(200, 10000, 500, 10000, 1);
  CHECK(range.ok());
  auto fourier = suites::sawtooth_fourier_bound(2000, 128.0, 2.0, 1);
  CHECK(fourier.ok());
  CHECK(fourier.metrics.front().second <= 2.0);
  auto tri = suites::triangle_linear_bound(500, 2.0);
  CHECK(tri.ok());
  auto agree = suites::counters_agree_exhaustive(3);
  CHECK(agree.ok());
  auto rnd = suites::counters_agree_random(5, 10, 40, 1);
  CHECK(rnd.ok());
  auto prog = suites::progression_regimes(12, 6, 400, 1);
  CHECK(prog.ok());
  auto interval = suites::interval_count_identity(60, 8);
  CHECK(interval.ok());
  auto routes = suites::triangle_routes_agree(50, 2, 500, 1);
  CHECK(routes.ok());
  auto quadrant = suites::positive_quadrant_identity(20, 8, 2, 1);
  CHECK(quadrant.ok());
  auto closed = suites::closed_form_cells(12);
  CHECK(closed.ok());
  auto err = suites::error_difference_identity();
  CHECK(err.ok());
}
