#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detcount/asymptotics.hpp"
#include "detcount/common.hpp"
#include "detcount/counting.hpp"

namespace detcount::harness {

/// Unreadable or inconsistent sweep configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How h is derived from N for one row of the grid.
struct HRule {
  enum class Kind {
    constant,      // h = value
    proportional,  // h = max(1, floor(value * N))
    square_offset, // h = N^2 + floor(value * N)
    power,         // h = floor(N^(1 + value)), clamped to [1, 2N^2]
  };
  Kind kind = Kind::constant;
  double value = 1.0;

  i64 h_for(i64 N) const;
  std::string str() const;
};

struct SweepConfig {
  std::string regime = "custom";  // mt1 | mt2 | lower | singular | custom
  std::string method = "auto";    // naive | hyperbola | linear | t_tilde | auto
  std::vector<i64> Ns;
  std::vector<HRule> h_rules;
  counting::CounterCaps caps;
  asymptotics::VerifyThresholds thresholds;
  double lower_bound_delta = 0.5;
  int workers = 1;
  u64 seed = 0;
  std::string cache_path = "detcount_cache.jsonl";
  std::string report_path = "detcount_report.json";
};

/// Parses the config JSON document; missing grid/h_rules fall back to the
/// regime's default grid. Throws ConfigError on malformed input.
SweepConfig parse_config(const std::string& json_text);
SweepConfig load_config(const std::string& path);

/// Command-line values that take precedence over the file.
struct ConfigOverrides {
  std::optional<std::string> cache_path;
  std::optional<std::string> report_path;
  std::optional<int> workers;
  std::optional<u64> seed;
};

void apply_overrides(SweepConfig& config, const ConfigOverrides& overrides);

/// Fully expanded (h, N) grid, sorted by (N, h). Validates grid invariants.
std::vector<asymptotics::GridCell> expand_grid(const SweepConfig& config);

}  // namespace detcount::harness
