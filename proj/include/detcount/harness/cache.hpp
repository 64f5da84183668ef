#pragma once

#include <string>
#include <vector>

#include "detcount/harness/records.hpp"

namespace detcount::harness {

/// A cache line that failed to parse or validate; carries the 1-based line number.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Loads the whole JSON-lines cache; empty vector when the file is absent.
std::vector<ResultRecord> load_cache(const std::string& path);

/// Appends records under an exclusive file lock, one JSON object per line.
void append_cache(const std::string& path, const std::vector<ResultRecord>& records);

}  // namespace detcount::harness
