#include "detcount/harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace detcount::harness {

namespace {

using nlohmann::json;

HRule::Kind parse_kind(const std::string& name) {
  if (name == "constant") return HRule::Kind::constant;
  if (name == "proportional") return HRule::Kind::proportional;
  if (name == "square_offset") return HRule::Kind::square_offset;
  if (name == "power") return HRule::Kind::power;
  throw ConfigError("unknown h-rule kind '" + name + "'");
}

std::vector<i64> default_grid(const std::string& regime) {
  if (regime == "mt1" || regime == "mt2") return {250, 500, 1000, 2000, 4000};
  if (regime == "lower") return {100, 200, 400, 800};
  if (regime == "singular") return {100, 200, 400, 800, 1600, 3200};
  return {};
}

std::vector<HRule> default_rules(const std::string& regime) {
  using K = HRule::Kind;
  if (regime == "mt1") {
    return {{K::constant, 1}, {K::constant, 12}, {K::proportional, 0.5}};
  }
  if (regime == "mt2") return {{K::square_offset, 0}};
  if (regime == "lower") return {{K::power, 0.5}};
  if (regime == "singular") return {{K::constant, 0}};  // placeholder; h forced to 0
  return {};
}

}  // namespace

i64 HRule::h_for(i64 N) const {
  double nd = static_cast<double>(N);
  switch (kind) {
    case Kind::constant:
      return static_cast<i64>(value);
    case Kind::proportional:
      return std::max<i64>(1, static_cast<i64>(std::floor(value * nd)));
    case Kind::square_offset:
      return N * N + static_cast<i64>(std::floor(value * nd));
    case Kind::power: {
      i64 h = static_cast<i64>(std::floor(std::pow(nd, 1.0 + value)));
      return std::clamp<i64>(h, 1, 2 * N * N);
    }
  }
  return 1;
}

std::string HRule::str() const {
  switch (kind) {
    case Kind::constant: return "h=" + std::to_string(static_cast<i64>(value));
    case Kind::proportional: return "h=floor(" + std::to_string(value) + "*N)";
    case Kind::square_offset: return "h=N^2+floor(" + std::to_string(value) + "*N)";
    case Kind::power: return "h=floor(N^" + std::to_string(1.0 + value) + ")";
  }
  return "?";
}

SweepConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse failed: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  SweepConfig cfg;
  try {
    if (j.contains("regime")) cfg.regime = j.at("regime").get<std::string>();
    if (j.contains("method")) cfg.method = j.at("method").get<std::string>();
    if (j.contains("grid")) {
      const json& g = j.at("grid");
      if (g.contains("N")) {
        cfg.Ns = g.at("N").get<std::vector<i64>>();
      } else if (g.contains("N_geometric")) {
        const json& geo = g.at("N_geometric");
        i64 from = geo.at("from").get<i64>();
        i64 to = geo.at("to").get<i64>();
        double factor = geo.value("factor", 2.0);
        if (from < 1 || to < from || factor <= 1.0) {
          throw ConfigError("bad N_geometric range");
        }
        for (double n = static_cast<double>(from); n <= static_cast<double>(to) + 0.5;
             n *= factor) {
          cfg.Ns.push_back(static_cast<i64>(std::llround(n)));
        }
      } else {
        throw ConfigError("grid must hold N or N_geometric");
      }
    }
    if (j.contains("h_rules")) {
      for (const json& r : j.at("h_rules")) {
        HRule rule;
        rule.kind = parse_kind(r.at("kind").get<std::string>());
        switch (rule.kind) {
          case HRule::Kind::constant: rule.value = r.at("value").get<double>(); break;
          case HRule::Kind::proportional: rule.value = r.at("ratio").get<double>(); break;
          case HRule::Kind::square_offset: rule.value = r.at("scale").get<double>(); break;
          case HRule::Kind::power: rule.value = r.at("delta").get<double>(); break;
        }
        cfg.h_rules.push_back(rule);
      }
    }
    if (j.contains("caps")) {
      const json& c = j.at("caps");
      cfg.caps.naive = c.value("naive", cfg.caps.naive);
      cfg.caps.hyperbola = c.value("hyperbola", cfg.caps.hyperbola);
      cfg.caps.linear = c.value("linear", cfg.caps.linear);
    }
    if (j.contains("thresholds")) {
      const json& t = j.at("thresholds");
      auto& th = cfg.thresholds;
      th.exponent_slack = t.value("exponent_slack", th.exponent_slack);
      th.near_square_slack = t.value("near_square_slack", th.near_square_slack);
      th.relative_error = t.value("relative_error", th.relative_error);
      th.lower_bound_floor = t.value("lower_bound_floor", th.lower_bound_floor);
      th.trend_min = t.value("trend_min", th.trend_min);
      th.singular_constant = t.value("singular_constant", th.singular_constant);
    }
    if (j.contains("delta")) cfg.lower_bound_delta = j.at("delta").get<double>();
    if (j.contains("workers")) cfg.workers = j.at("workers").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<u64>();
    if (j.contains("cache")) cfg.cache_path = j.at("cache").get<std::string>();
    if (j.contains("report")) cfg.report_path = j.at("report").get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field error: ") + e.what());
  }

  static const std::set<std::string> regimes{"mt1", "mt2", "lower", "singular", "custom"};
  if (!regimes.count(cfg.regime)) throw ConfigError("unknown regime '" + cfg.regime + "'");
  if (!counting::parse_method(cfg.method) && cfg.method != "auto") {
    throw ConfigError("unknown method '" + cfg.method + "'");
  }
  if (cfg.Ns.empty()) cfg.Ns = default_grid(cfg.regime);
  if (cfg.h_rules.empty()) cfg.h_rules = default_rules(cfg.regime);
  if (cfg.regime == "lower") {
    cfg.h_rules = {{HRule::Kind::power, cfg.lower_bound_delta}};
  }
  if (cfg.Ns.empty()) throw ConfigError("empty N grid (custom regime needs grid.N)");
  if (cfg.h_rules.empty() && cfg.regime != "singular") {
    throw ConfigError("no h rules (custom regime needs h_rules)");
  }
  if (cfg.workers < 1) throw ConfigError("workers must be >= 1");
  i64 nmin = *std::min_element(cfg.Ns.begin(), cfg.Ns.end());
  if (nmin < 1) throw ConfigError("grid N values must be positive");
  i64 cap_max = std::max({cfg.caps.naive, cfg.caps.hyperbola, cfg.caps.linear});
  if (cap_max < nmin) throw ConfigError("caps below the smallest grid value");
  return cfg;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void apply_overrides(SweepConfig& config, const ConfigOverrides& overrides) {
  if (overrides.cache_path) config.cache_path = *overrides.cache_path;
  if (overrides.report_path) config.report_path = *overrides.report_path;
  if (overrides.workers) config.workers = *overrides.workers;
  if (overrides.seed) config.seed = *overrides.seed;
}

std::vector<asymptotics::GridCell> expand_grid(const SweepConfig& config) {
  std::vector<asymptotics::GridCell> cells;
  for (i64 N : config.Ns) {
    if (config.regime == "singular") {
      cells.push_back({0, N});
      continue;
    }
    for (const HRule& rule : config.h_rules) {
      i64 h = rule.h_for(N);
      if (h < 0 || h > 2 * N * N) {
        throw ConfigError("h rule " + rule.str() + " leaves [0, 2N^2] at N=" +
                          std::to_string(N));
      }
      cells.push_back({h, N});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    return a.N != b.N ? a.N < b.N : a.h < b.h;
  });
  cells.erase(std::unique(cells.begin(), cells.end(),
                          [](const auto& a, const auto& b) {
                            return a.N == b.N && a.h == b.h;
                          }),
              cells.end());
  return cells;
}

}  // namespace detcount::harness
