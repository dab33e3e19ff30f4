#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "npfree/engine.hpp"
#include "npfree/metrics.hpp"
#include "npfree/series.hpp"

namespace npfree {

/// RMSE over the last 3 indices, threshold over the newest 1440 values.
struct RmseMetric {
  static constexpr std::size_t window = hyper::sliding_window;
  static double error(const Triple& observed, const Triple& predicted) {
    return compute_rmse(observed, predicted);
  }
};

struct RmsePoint {
  std::size_t t = 0;
  double rmse = 0.0;
  bool retrained = false;

  friend bool operator==(const RmsePoint&, const RmsePoint&) = default;
};

struct RmseSeries {
  std::string source_name;
  std::vector<RmsePoint> points;

  std::vector<double> values() const {
    std::vector<double> v;
    v.reserve(points.size());
    for (const auto& p : points) v.push_back(p.rmse);
    return v;
  }

  friend bool operator==(const RmseSeries&, const RmseSeries&) = default;
};

/// Streaming converter: one raw value in, at most one RMSE point out. An
/// instance holds the whole state of one stream and is not thread-safe;
/// separate streams need separate instances.
class Converter {
 public:
  std::optional<RmsePoint> step(double value) {
    last_ = engine_.step(value);
    if (!last_) return std::nullopt;
    return RmsePoint{last_->t, last_->error, last_->retrained};
  }

  /// Full record of the most recent step (threshold statistics included).
  const std::optional<StepRecord>& last_record() const noexcept { return last_; }
  std::size_t next_index() const noexcept { return engine_.next_index(); }
  bool flag() const noexcept { return engine_.flag(); }
  std::size_t history_size() const noexcept { return engine_.history().size(); }

 private:
  AdaptiveForecaster<RmseMetric> engine_;
  std::optional<StepRecord> last_;
};

/// Smallest input that yields any output.
inline constexpr std::size_t kMinConvertLength = kFirstErrorIndex + 1;

/// Batch conversion: N values give N - 5 points. Throws TooShort below 6 values.
inline RmseSeries convert(const TimeSeries& series) {
  if (series.size() < kMinConvertLength)
    throw Error(ErrorCode::too_short, "convert needs at least 6 values, got " + std::to_string(series.size()));
  RmseSeries out{series.name, {}};
  out.points.reserve(series.size() - kFirstErrorIndex);
  Converter c;
  for (double v : series.values)
    if (auto p = c.step(v)) out.points.push_back(*p);
  return out;
}

}  // namespace npfree
