#pragma once

#include <string>
#include <vector>

#include "detcount/harness/records.hpp"

namespace detcount::harness {

/// RFC-4180 field quoting (quotes fields holding comma, quote or newline).
std::string csv_escape(const std::string& field);

/// Writes <prefix>_mt1.csv and <prefix>_mt2.csv, one row per record, with
/// columns N,h,T,MT,E,normalizer,ratio,sigma. Returns the file paths.
std::vector<std::string> export_csv(const std::vector<ResultRecord>& records,
                                    const std::string& prefix);

}  // namespace detcount::harness
