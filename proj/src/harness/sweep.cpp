#include "detcount/harness/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <thread>

#include "json.hpp"

#include "detcount/decomposition.hpp"
#include "detcount/harness/cache.hpp"

namespace detcount::harness {

namespace {

struct CellOutcome {
  std::optional<ResultRecord> record;
  std::string error;
};

counting::CountResult run_cell(i64 h, i64 N, const std::string& method,
                               counting::AutoCounter& counter) {
  if (method == "t_tilde") {
    auto start = std::chrono::steady_clock::now();
    i64 value = decomposition::t_tilde(h, N);
    i64 ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count();
    return {h, N, counting::Method::t_tilde, value, ns};
  }
  std::optional<counting::Method> forced;
  if (method != "auto") forced = counting::parse_method(method);
  return counter.count(h, N, forced);
}

}  // namespace

SweepOutcome run_sweep(const SweepConfig& config) {
  SweepOutcome outcome;
  auto cells = expand_grid(config);

  std::vector<ResultRecord> cached = load_cache(config.cache_path);
  std::map<std::pair<i64, i64>, ResultRecord> have;
  for (const auto& r : cached) {
    if (r.schema_version != kSchemaVersion) continue;
    if (config.method == "auto") {
      if (r.method == "t_tilde") continue;  // not an exact count
    } else if (r.method != config.method) {
      continue;
    }
    have.emplace(std::make_pair(r.N, r.h), r);
  }

  counting::AutoCounter counter(config.caps);
  const std::string timestamp = utc_timestamp_now();

  std::vector<size_t> todo;
  std::vector<CellOutcome> slots(cells.size());
  std::vector<char> is_fresh(cells.size(), 0);
  for (size_t i = 0; i < cells.size(); ++i) {
    auto it = have.find({cells[i].N, cells[i].h});
    if (it != have.end()) {
      slots[i].record = it->second;
      ++outcome.reused;
    } else {
      todo.push_back(i);
      is_fresh[i] = 1;
    }
  }

  // Group remaining work by N so a profile is built once per size, then let
  // the pool pull cells; slots keep results in grid order regardless of
  // scheduling.
  size_t pos = 0;
  while (pos < todo.size()) {
    size_t end = pos;
    i64 groupN = cells[todo[pos]].N;
    while (end < todo.size() && cells[todo[end]].N == groupN) ++end;
    if ((config.method == "auto" || config.method == "hyperbola") &&
        groupN <= config.caps.hyperbola) {
      counter.profile(groupN);  // warm the cache before the pool starts
    }
    std::atomic<size_t> next{pos};
    int workers = std::max(1, std::min<int>(config.workers, static_cast<int>(end - pos)));
    auto work = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= end) break;
        size_t slot = todo[i];
        try {
          auto result = run_cell(cells[slot].h, cells[slot].N, config.method, counter);
          slots[slot].record = make_record(result, timestamp);
        } catch (const std::exception& e) {
          slots[slot].error = e.what();
        }
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<size_t>(workers));
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    pos = end;
  }

  std::vector<ResultRecord> fresh;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (slots[i].record) {
      outcome.records.push_back(*slots[i].record);
      if (is_fresh[i]) {
        fresh.push_back(*slots[i].record);
        ++outcome.computed;
      }
    } else {
      ++outcome.failed;
      outcome.report.notes.push_back("cell h=" + std::to_string(cells[i].h) + " N=" +
                                     std::to_string(cells[i].N) + " failed: " +
                                     slots[i].error);
    }
  }

  auto key = [](const ResultRecord& r) { return std::tuple(r.N, r.h, r.method); };
  std::sort(outcome.records.begin(), outcome.records.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  std::sort(fresh.begin(), fresh.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  append_cache(config.cache_path, fresh);

  // Regime report straight from the records (no recount).
  if (config.regime != "custom") {
    auto& rep = outcome.report;
    rep.name = config.regime;
    rep.grid = std::to_string(cells.size()) + " cells";
    std::vector<std::pair<double, double>> pts;
    double min_ratio = std::numeric_limits<double>::infinity();
    double max_ratio = 0.0;
    for (const auto& r : outcome.records) {
      double value = 0.0;
      if (config.regime == "mt1") {
        value = std::abs(r.e1) / static_cast<double>(r.h + r.N);
      } else if (config.regime == "mt2") {
        value = std::abs(r.e2) / static_cast<double>(r.N + std::abs(r.h - r.N * r.N) + 1);
      } else if (config.regime == "lower") {
        value = std::abs(r.e1) / static_cast<double>(r.h);
        min_ratio = std::min(min_ratio, value);
      } else if (config.regime == "singular") {
        double nn = static_cast<double>(r.N);
        double main = (16.0 / asymptotics::zeta2()) * nn * nn * std::log(nn);
        value = std::abs(static_cast<double>(r.count) - main) / (nn * nn);
        if (r.N > 1) max_ratio = std::max(max_ratio, value);
      }
      pts.emplace_back(static_cast<double>(r.N), value);
      asymptotics::AsymptoticPoint p;
      p.h = r.h;
      p.N = r.N;
      p.count = r.count;
      p.mt1 = r.mt1;
      p.mt2 = r.mt2;
      p.e1 = r.e1;
      p.e2 = r.e2;
      p.sigma = Rational::parse(r.sigma);
      rep.points.push_back(p);
    }
    try {
      auto fit = asymptotics::fit_exponent(pts);
      rep.alpha = fit.alpha;
      rep.C = fit.C;
      rep.dropped_zero = fit.dropped;
      for (size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].second <= 0.0) continue;
        asymptotics::FitSample s;
        s.h = outcome.records[i].h;
        s.N = outcome.records[i].N;
        s.scale = pts[i].first;
        s.value = pts[i].second;
        s.fitted = fit.C * std::pow(pts[i].first, fit.alpha);
        s.residual = std::log(s.value) - std::log(s.fitted);
        rep.samples.push_back(s);
      }
    } catch (const InsufficientDataError& e) {
      rep.notes.push_back(e.what());
    }
    const auto& th = config.thresholds;
    if (config.regime == "mt1" || config.regime == "mt2") {
      rep.threshold = config.regime == "mt1" ? th.exponent_slack : th.near_square_slack;
      rep.pass = rep.alpha <= rep.threshold;
    } else if (config.regime == "lower") {
      rep.threshold = th.lower_bound_floor;
      rep.min_ratio = min_ratio;
      rep.pass = min_ratio >= th.lower_bound_floor && rep.alpha >= th.trend_min;
    } else if (config.regime == "singular") {
      rep.threshold = th.singular_constant;
      rep.max_ratio = max_ratio;
      rep.pass = max_ratio <= th.singular_constant;
    }
    if (outcome.failed > 0) rep.pass = false;
  }

  if (!config.report_path.empty() && config.regime != "custom") {
    std::ofstream out(config.report_path);
    out << report_to_json(outcome.report, outcome.degraded()) << "\n";
  }
  return outcome;
}

std::string report_to_json(const asymptotics::RegimeReport& report, bool degraded) {
  nlohmann::ordered_json j;
  j["name"] = report.name;
  j["grid"] = report.grid;
  j["alpha"] = report.alpha;
  j["C"] = report.C;
  j["threshold"] = report.threshold;
  j["pass"] = report.pass;
  j["degraded"] = degraded;
  j["dropped_zero"] = report.dropped_zero;
  if (report.min_ratio != 0.0) j["min_ratio"] = report.min_ratio;
  if (report.max_ratio != 0.0) j["max_ratio"] = report.max_ratio;
  j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : report.points) {
    nlohmann::ordered_json pj;
    pj["h"] = p.h;
    pj["N"] = p.N;
    pj["count"] = p.count;
    pj["mt1"] = p.mt1;
    pj["mt2"] = p.mt2;
    pj["e1"] = p.e1;
    pj["e2"] = p.e2;
    pj["sigma"] = p.sigma.str();
    j["points"].push_back(pj);
  }
  j["samples"] = nlohmann::ordered_json::array();
  for (const auto& s : report.samples) {
    nlohmann::ordered_json sj;
    sj["h"] = s.h;
    sj["N"] = s.N;
    sj["scale"] = s.scale;
    sj["value"] = s.value;
    sj["fitted"] = s.fitted;
    sj["residual"] = s.residual;
    j["samples"].push_back(sj);
  }
  j["notes"] = report.notes;
  return j.dump(2);
}

}  // namespace detcount::harness
