#pragma once

#include <cmath>
#include <cstddef>
#include <iterator>
#include <span>

#include "npfree/error.hpp"

namespace npfree {

/// Three-sigma summary of an error history: threshold = mean + 3 * sigma,
/// sigma being the population standard deviation.
struct ThresholdStats {
  double mean = 0.0;
  double sigma = 0.0;
  double threshold = 0.0;
  std::size_t samples = 0;  // how many history values were read

  friend bool operator==(const ThresholdStats&, const ThresholdStats&) = default;
};

/// Two-pass mean and population sigma over [first, last).
template <std::forward_iterator It>
ThresholdStats three_sigma(It first, It last) {
  const auto n = static_cast<std::size_t>(std::distance(first, last));
  if (n == 0) throw Error(ErrorCode::empty_history, "no error values to build a threshold from");
  double sum = 0.0;
  for (It it = first; it != last; ++it) sum += *it;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (It it = first; it != last; ++it) {
    const double d = *it - mean;
    ss += d * d;
  }
  const double sigma = std::sqrt(ss / static_cast<double>(n));
  return {mean, sigma, mean + 3.0 * sigma, n};
}

/// Sliding-window threshold: statistics over the last min(size, window)
/// values of `history`, which must already include the current value.
inline ThresholdStats compute_threshold(std::span<const double> history, std::size_t window) {
  if (history.empty()) throw Error(ErrorCode::empty_history, "compute_threshold: empty history");
  const std::size_t n = (window == 0 || history.size() < window) ? history.size() : window;
  auto tail = history.last(n);
  return three_sigma(tail.begin(), tail.end());
}

/// Whole-history threshold (no window).
inline ThresholdStats compute_aare_threshold(std::span<const double> history) {
  if (history.empty()) throw Error(ErrorCode::empty_history, "compute_aare_threshold: empty history");
  return three_sigma(history.begin(), history.end());
}

}  // namespace npfree
