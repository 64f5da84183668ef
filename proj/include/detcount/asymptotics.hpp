#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "detcount/common.hpp"
#include "detcount/counting.hpp"
#include "detcount/rational.hpp"

namespace detcount::asymptotics {

/// zeta(2) = pi^2/6 to full double precision.
double zeta2();

/// (16/zeta(2)) N^2 sigma_{-1}(h). The divisor factor is carried as an
/// exact rational and converted once. h <= 0 is a domain error.
double main_term1(i64 h, i64 N);
/// (8/zeta(2) - 4) N^2 sigma_{-1}(h).
double main_term2(i64 h, i64 N);

struct AsymptoticPoint {
  i64 h = 0;
  i64 N = 0;
  i64 count = 0;
  double mt1 = 0.0;
  double mt2 = 0.0;
  double e1 = 0.0;  // count - mt1
  double e2 = 0.0;  // count - mt2
  Rational sigma;   // (h - N^2)/N, exact
};

AsymptoticPoint make_point(i64 h, i64 N, i64 count);

struct FitResult {
  double alpha = 0.0;  // fitted exponent
  double C = 0.0;      // fitted constant
  int used = 0;
  int dropped = 0;  // nonpositive values dropped before the log-log fit
};

/// Least squares of log value = alpha log scale + log C. Values <= 0 are
/// dropped; fewer than 4 usable points raises InsufficientDataError.
FitResult fit_exponent(std::span<const std::pair<double, double>> points);

struct VerifyThresholds {
  double exponent_slack = 0.2;      // alpha cap for the normalized |E1| fit
  double near_square_slack = 0.35;  // same for |E2|; its window exponent sits higher
  double relative_error = 0.02;     // top-N relative error, small-h regime
  double lower_bound_floor = 0.05;
  double trend_min = -0.25;         // min fitted exponent of |E1|/h vs N
  double singular_constant = 20.0;
};

struct FitSample {
  i64 h = 0;
  i64 N = 0;
  double scale = 0.0;
  double value = 0.0;
  double fitted = 0.0;
  double residual = 0.0;  // log value - log fitted
};

struct RegimeReport {
  std::string name;
  std::string grid;
  double alpha = 0.0;
  double C = 0.0;
  double threshold = 0.0;
  bool pass = false;
  int dropped_zero = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::vector<AsymptoticPoint> points;
  std::vector<FitSample> samples;
  std::vector<std::string> notes;
};

struct GridCell {
  i64 h = 0;
  i64 N = 0;
};

/// Fits |E1|/(h + N) against N; passes when alpha <= exponent_slack.
/// Capacity failures skip the cell with a note.
RegimeReport verify_main_term1(std::span<const GridCell> cells,
                               counting::AutoCounter& counter,
                               const VerifyThresholds& thresholds = {});

/// Fits |E2|/(N + |h - N^2| + 1) against N; same pass rule.
RegimeReport verify_main_term2(std::span<const GridCell> cells,
                               counting::AutoCounter& counter,
                               const VerifyThresholds& thresholds = {});

/// h = floor(N^(1+delta)) per N; tracks |E1|/h. Passes when the minimum
/// ratio clears lower_bound_floor and the fitted trend is not downward.
RegimeReport verify_lower_bound(double delta, std::span<const i64> Ns,
                                counting::AutoCounter& counter,
                                const VerifyThresholds& thresholds = {});

/// |T(0,N) - (16/zeta(2)) N^2 log N| / N^2 per cell, bounded by
/// singular_constant. N = 1 cells are reported but excluded.
RegimeReport verify_singular(std::span<const i64> Ns,
                             counting::AutoCounter& counter,
                             const VerifyThresholds& thresholds = {});

}  // namespace detcount::asymptotics
