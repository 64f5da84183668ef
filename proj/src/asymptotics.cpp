#include "detcount/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "detcount/arith.hpp"

namespace detcount::asymptotics {

double zeta2() { return M_PI * M_PI / 6.0; }

namespace {

double main_term(double constant, i64 h, i64 N) {
  if (h <= 0) throw std::domain_error("main term: h must be positive");
  double nn = static_cast<double>(N);
  return constant * nn * nn * arith::sigma_inv(h).to_double();
}

std::string cells_desc(std::span<const GridCell> cells) {
  if (cells.empty()) return "(empty)";
  i64 nmin = cells.front().N, nmax = cells.front().N;
  for (const auto& c : cells) {
    nmin = std::min(nmin, c.N);
    nmax = std::max(nmax, c.N);
  }
  return std::to_string(cells.size()) + " cells, N in [" + std::to_string(nmin) +
         ", " + std::to_string(nmax) + "]";
}

void apply_fit(RegimeReport& report, const std::vector<FitSample>& raw) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(raw.size());
  for (const auto& s : raw) pts.emplace_back(s.scale, s.value);
  FitResult fit = fit_exponent(pts);
  report.alpha = fit.alpha;
  report.C = fit.C;
  report.dropped_zero = fit.dropped;
  for (const auto& s : raw) {
    if (s.value <= 0.0) {
      report.notes.push_back("dropped zero-error cell h=" + std::to_string(s.h) +
                             " N=" + std::to_string(s.N));
      continue;
    }
    FitSample kept = s;
    kept.fitted = fit.C * std::pow(s.scale, fit.alpha);
    kept.residual = std::log(s.value) - std::log(kept.fitted);
    report.samples.push_back(kept);
  }
}

}  // namespace

double main_term1(i64 h, i64 N) { return main_term(16.0 / zeta2(), h, N); }

double main_term2(i64 h, i64 N) { return main_term(8.0 / zeta2() - 4.0, h, N); }

AsymptoticPoint make_point(i64 h, i64 N, i64 count) {
  AsymptoticPoint p;
  p.h = h;
  p.N = N;
  p.count = count;
  p.mt1 = main_term1(h, N);
  p.mt2 = main_term2(h, N);
  p.e1 = static_cast<double>(count) - p.mt1;
  p.e2 = static_cast<double>(count) - p.mt2;
  p.sigma = Rational(h - N * N, N);
  return p;
}

FitResult fit_exponent(std::span<const std::pair<double, double>> points) {
  FitResult out;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [scale, value] : points) {
    if (!(value > 0.0) || !(scale > 0.0)) {
      ++out.dropped;
      continue;
    }
    double lx = std::log(scale), ly = std::log(value);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++out.used;
  }
  if (out.used < 4) {
    throw InsufficientDataError("fit_exponent: " + std::to_string(out.used) +
                                " usable points, need >= 4");
  }
  double n = static_cast<double>(out.used);
  double denom = n * sxx - sx * sx;
  if (denom == 0.0) {  // all scales equal: treat as constant data
    out.alpha = 0.0;
    out.C = std::exp(sy / n);
    return out;
  }
  out.alpha = (n * sxy - sx * sy) / denom;
  out.C = std::exp((sy - out.alpha * sx) / n);
  return out;
}

RegimeReport verify_main_term1(std::span<const GridCell> cells,
                               counting::AutoCounter& counter,
                               const VerifyThresholds& thresholds) {
  RegimeReport report;
  report.name = "mt1";
  report.grid = cells_desc(cells);
  report.threshold = thresholds.exponent_slack;
  std::vector<FitSample> raw;
  for (const auto& cell : cells) {
    try {
      AsymptoticPoint p = make_point(cell.h, cell.N, counter.count(cell.h, cell.N).count);
      report.points.push_back(p);
      raw.push_back({cell.h, cell.N, static_cast<double>(cell.N),
                     std::abs(p.e1) / static_cast<double>(cell.h + cell.N), 0, 0});
    } catch (const CapacityError& e) {
      report.notes.push_back("skipped h=" + std::to_string(cell.h) + " N=" +
                             std::to_string(cell.N) + ": " + e.what());
    }
  }
  apply_fit(report, raw);
  report.pass = report.alpha <= report.threshold;
  return report;
}

RegimeReport verify_main_term2(std::span<const GridCell> cells,
                               counting::AutoCounter& counter,
                               const VerifyThresholds& thresholds) {
  RegimeReport report;
  report.name = "mt2";
  report.grid = cells_desc(cells);
  report.threshold = thresholds.near_square_slack;
  std::vector<FitSample> raw;
  for (const auto& cell : cells) {
    try {
      AsymptoticPoint p = make_point(cell.h, cell.N, counter.count(cell.h, cell.N).count);
      report.points.push_back(p);
      double normalizer =
          static_cast<double>(cell.N + std::abs(cell.h - cell.N * cell.N) + 1);
      raw.push_back({cell.h, cell.N, static_cast<double>(cell.N),
                     std::abs(p.e2) / normalizer, 0, 0});
    } catch (const CapacityError& e) {
      report.notes.push_back("skipped h=" + std::to_string(cell.h) + " N=" +
                             std::to_string(cell.N) + ": " + e.what());
    }
  }
  apply_fit(report, raw);
  report.pass = report.alpha <= report.threshold;
  return report;
}

RegimeReport verify_lower_bound(double delta, std::span<const i64> Ns,
                                counting::AutoCounter& counter,
                                const VerifyThresholds& thresholds) {
  if (!(delta > 0.0) || delta > 1.0) {
    throw std::domain_error("verify_lower_bound: delta must lie in (0, 1]");
  }
  RegimeReport report;
  report.name = "lower";
  report.threshold = thresholds.lower_bound_floor;
  report.grid = std::to_string(Ns.size()) + " sizes, delta=" + std::to_string(delta);
  std::vector<FitSample> raw;
  double min_ratio = std::numeric_limits<double>::infinity();
  for (i64 N : Ns) {
    i64 h = static_cast<i64>(std::floor(std::pow(static_cast<double>(N), 1.0 + delta)));
    h = std::min(h, 2 * N * N);
    try {
      AsymptoticPoint p = make_point(h, N, counter.count(h, N).count);
      report.points.push_back(p);
      double ratio = std::abs(p.e1) / static_cast<double>(h);
      min_ratio = std::min(min_ratio, ratio);
      raw.push_back({h, N, static_cast<double>(N), ratio, 0, 0});
    } catch (const CapacityError& e) {
      report.notes.push_back("skipped N=" + std::to_string(N) + ": " + e.what());
    }
  }
  apply_fit(report, raw);
  report.min_ratio = min_ratio;
  report.pass = min_ratio >= thresholds.lower_bound_floor &&
                report.alpha >= thresholds.trend_min;
  return report;
}

RegimeReport verify_singular(std::span<const i64> Ns,
                             counting::AutoCounter& counter,
                             const VerifyThresholds& thresholds) {
  RegimeReport report;
  report.name = "singular";
  report.threshold = thresholds.singular_constant;
  report.grid = std::to_string(Ns.size()) + " sizes";
  std::vector<FitSample> raw;
  double max_ratio = 0.0;
  bool bounded = true;
  for (i64 N : Ns) {
    try {
      i64 T0 = counter.count(0, N).count;
      double nn = static_cast<double>(N);
      double main = (16.0 / zeta2()) * nn * nn * std::log(nn);
      double ratio = std::abs(static_cast<double>(T0) - main) / (nn * nn);
      AsymptoticPoint p;  // h = 0 lies outside the divisor main terms
      p.h = 0;
      p.N = N;
      p.count = T0;
      p.e1 = static_cast<double>(T0) - main;
      p.e2 = p.e1;
      p.sigma = Rational(-N * N, N);
      report.points.push_back(p);
      if (N == 1) {
        report.notes.push_back("N=1 ratio " + std::to_string(ratio) +
                               " excluded (log 1 = 0)");
        continue;
      }
      raw.push_back({0, N, static_cast<double>(N), ratio, 0, 0});
      max_ratio = std::max(max_ratio, ratio);
      if (ratio > thresholds.singular_constant) bounded = false;
    } catch (const CapacityError& e) {
      report.notes.push_back("skipped N=" + std::to_string(N) + ": " + e.what());
    }
  }
  apply_fit(report, raw);
  report.max_ratio = max_ratio;
  report.pass = bounded;
  return report;
}

}  // namespace detcount::asymptotics
