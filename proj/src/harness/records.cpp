#include "detcount/harness/records.hpp"

#include <cstdlib>
#include <ctime>

#include "json.hpp"

namespace detcount::harness {

ResultRecord make_record(const counting::CountResult& result, const std::string& timestamp) {
  ResultRecord r;
  r.h = result.h;
  r.N = result.N;
  r.method = std::string(counting::method_name(result.method));
  r.count = result.count;
  if (result.h == 0) {
    // The divisor main terms need h >= 1; h = 0 records carry zeros and the
    // singular regime computes its own log main term.
    r.mt1 = r.mt2 = 0.0;
    r.e1 = r.e2 = static_cast<double>(result.count);
  } else {
    // T(h, N) = T(-h, N), so the main terms read the divisor sum of |h|.
    asymptotics::AsymptoticPoint p =
        asymptotics::make_point(std::abs(result.h), result.N, result.count);
    r.mt1 = p.mt1;
    r.mt2 = p.mt2;
    r.e1 = p.e1;
    r.e2 = p.e2;
  }
  r.sigma = Rational(result.h - result.N * result.N, result.N).str();
  r.elapsed_ns = result.elapsed_ns;
  r.timestamp = timestamp;
  return r;
}

std::string to_json_line(const ResultRecord& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = r.schema_version;
  j["h"] = r.h;
  j["N"] = r.N;
  j["method"] = r.method;
  j["count"] = r.count;
  j["mt1"] = r.mt1;
  j["mt2"] = r.mt2;
  j["e1"] = r.e1;
  j["e2"] = r.e2;
  j["sigma"] = r.sigma;
  j["elapsed_ns"] = r.elapsed_ns;
  j["timestamp"] = r.timestamp;
  return j.dump();
}

ResultRecord parse_record(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  ResultRecord r;
  try {
    r.schema_version = j.at("schema_version").get<int>();
    r.h = j.at("h").get<i64>();
    r.N = j.at("N").get<i64>();
    r.method = j.at("method").get<std::string>();
    r.count = j.at("count").get<i64>();
    r.mt1 = j.at("mt1").get<double>();
    r.mt2 = j.at("mt2").get<double>();
    r.e1 = j.at("e1").get<double>();
    r.e2 = j.at("e2").get<double>();
    r.sigma = j.at("sigma").get<std::string>();
    r.elapsed_ns = j.at("elapsed_ns").get<i64>();
    r.timestamp = j.at("timestamp").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("record field error: ") + e.what());
  }
  Rational::parse(r.sigma);  // must round-trip
  if (r.N < 1) throw std::invalid_argument("record field error: N must be positive");
  return r;
}

std::string utc_timestamp_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace detcount::harness
