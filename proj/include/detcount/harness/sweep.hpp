#pragma once

#include <string>
#include <vector>

#include "detcount/asymptotics.hpp"
#include "detcount/harness/config.hpp"
#include "detcount/harness/records.hpp"

namespace detcount::harness {

struct SweepOutcome {
  std::vector<ResultRecord> records;  // every grid cell, sorted by (N, h, method)
  asymptotics::RegimeReport report;   // empty name for the custom regime
  int computed = 0;
  int reused = 0;
  int failed = 0;

  bool degraded() const { return failed > 0; }
};

/// Runs the grid with a worker pool, skipping cells already present in the
/// cache with a matching schema version, then appends the new records in
/// deterministic sorted order and writes the regime report.
SweepOutcome run_sweep(const SweepConfig& config);

std::string report_to_json(const asymptotics::RegimeReport& report, bool degraded);

}  // namespace detcount::harness
