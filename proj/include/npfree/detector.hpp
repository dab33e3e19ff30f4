#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "npfree/engine.hpp"
#include "npfree/metrics.hpp"
#include "npfree/series.hpp"

namespace npfree {

/// AARE over the last 3 indices, threshold over every AARE value so far.
/// Memory for the history grows linearly with the stream.
struct AareMetric {
  static constexpr std::size_t window = 0;
  static double error(const Triple& observed, const Triple& predicted) {
    return compute_aare(observed, predicted);
  }
};

struct DetectionVerdict {
  std::size_t t = 0;
  double aare = 0.0;
  double threshold = 0.0;
  bool anomalous = false;
  bool retrained = false;

  friend bool operator==(const DetectionVerdict&, const DetectionVerdict&) = default;
};

/// Real-time anomaly detector. Verdicts start at t = 7, after the
/// preparation period; t = 5 and 6 only build up the error history.
class Detector {
 public:
  std::optional<DetectionVerdict> step(double value) {
    auto rec = engine_.step(value);
    if (!rec || !rec->stats) return std::nullopt;
    return DetectionVerdict{rec->t, rec->error, rec->stats->threshold, rec->exceeded, rec->retrained};
  }

  std::size_t next_index() const noexcept { return engine_.next_index(); }
  std::size_t history_size() const noexcept { return engine_.history().size(); }

 private:
  AdaptiveForecaster<AareMetric> engine_;
};

inline std::vector<DetectionVerdict> detect(const TimeSeries& series) {
  std::vector<DetectionVerdict> out;
  Detector d;
  for (double v : series.values)
    if (auto verdict = d.step(v)) out.push_back(*verdict);
  return out;
}

}  // namespace npfree
