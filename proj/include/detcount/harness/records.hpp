#pragma once

#include <string>

#include "detcount/asymptotics.hpp"
#include "detcount/common.hpp"

namespace detcount::harness {

inline constexpr int kSchemaVersion = 1;

/// One completed (h, N) cell; the JSON-lines cache stores one per line.
struct ResultRecord {
  int schema_version = kSchemaVersion;
  i64 h = 0;
  i64 N = 0;
  std::string method;
  i64 count = 0;
  double mt1 = 0.0;
  double mt2 = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
  std::string sigma;  // exact fraction "p/q"
  i64 elapsed_ns = 0;
  std::string timestamp;  // ISO 8601 UTC

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

ResultRecord make_record(const counting::CountResult& result, const std::string& timestamp);

std::string to_json_line(const ResultRecord& record);
/// Throws std::invalid_argument on any missing or mistyped field.
ResultRecord parse_record(const std::string& line);

std::string utc_timestamp_now();

}  // namespace detcount::harness
