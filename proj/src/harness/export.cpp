#include "detcount/harness/export.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace detcount::harness {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_regime(const std::vector<ResultRecord>& records, const std::string& path,
                  bool near_square) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("export_csv: cannot open " + path);
  out << "N,h,T,MT,E,normalizer,ratio,sigma\r\n";
  for (const auto& r : records) {
    double mt = near_square ? r.mt2 : r.mt1;
    double e = near_square ? r.e2 : r.e1;
    double normalizer = near_square
                            ? static_cast<double>(r.N + std::abs(r.h - r.N * r.N) + 1)
                            : static_cast<double>(r.h + r.N);
    double ratio = std::abs(e) / normalizer;
    out << r.N << ',' << r.h << ',' << r.count << ',' << csv_escape(fmt_double(mt))
        << ',' << csv_escape(fmt_double(e)) << ',' << csv_escape(fmt_double(normalizer))
        << ',' << csv_escape(fmt_double(ratio)) << ',' << csv_escape(r.sigma) << "\r\n";
  }
}

}  // namespace

std::vector<std::string> export_csv(const std::vector<ResultRecord>& records,
                                    const std::string& prefix) {
  std::vector<std::string> paths{prefix + "_mt1.csv", prefix + "_mt2.csv"};
  write_regime(records, paths[0], false);
  write_regime(records, paths[1], true);
  return paths;
}

}  // namespace detcount::harness
