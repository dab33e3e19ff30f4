#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "npfree/converter.hpp"
#include "npfree/series.hpp"

namespace npfree {

struct LatencyStats {
  std::size_t count = 0;
  double mean_seconds = 0.0;
  double std_seconds = 0.0;  // population
};

inline LatencyStats summarize(const std::vector<double>& seconds) {
  LatencyStats s;
  s.count = seconds.size();
  if (seconds.empty()) return s;
  double sum = 0.0;
  for (double x : seconds) sum += x;
  s.mean_seconds = sum / static_cast<double>(s.count);
  double ss = 0.0;
  for (double x : seconds) ss += (x - s.mean_seconds) * (x - s.mean_seconds);
  s.std_seconds = std::sqrt(ss / static_cast<double>(s.count));
  return s;
}

/// Retrain counts and per-step latency of one conversion run. Only steps
/// that emit an RMSE value (t >= 5) are timed.
struct BenchReport {
  std::string series_name;
  std::size_t n_points = 0;
  std::size_t n_emitted = 0;
  std::size_t n_retrains = 0;
  double retrain_ratio = 0.0;  // n_retrains / n_points
  LatencyStats with_retrain;
  LatencyStats without_retrain;
  RmseSeries output;
};

template <typename Clock = std::chrono::steady_clock>
BenchReport bench(const TimeSeries& series) {
  BenchReport r;
  r.series_name = series.name;
  r.n_points = series.size();
  r.output.source_name = series.name;
  std::vector<double> retrain_times, plain_times;
  Converter c;
  for (double v : series.values) {
    const auto start = Clock::now();
    const auto p = c.step(v);
    const auto stop = Clock::now();
    if (!p) continue;
    const double dt = std::chrono::duration<double>(stop - start).count();
    (p->retrained ? retrain_times : plain_times).push_back(dt);
    r.output.points.push_back(*p);
  }
  r.n_emitted = r.output.points.size();
  r.n_retrains = retrain_times.size();
  r.retrain_ratio = r.n_points == 0 ? 0.0 : static_cast<double>(r.n_retrains) / static_cast<double>(r.n_points);
  r.with_retrain = summarize(retrain_times);
  r.without_retrain = summarize(plain_times);
  return r;
}

}  // namespace npfree
