#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "npfree/error.hpp"

namespace npfree {

/// Raw input series. Timestamps, when present, are carried through I/O only.
struct TimeSeries {
  std::string name;
  std::vector<double> values;
  std::vector<std::string> timestamps;  // empty, or one per value

  std::size_t size() const noexcept { return values.size(); }
};

/// sqrt(sum_z (a_z - b_z)^2) over equal-length sequences.
inline double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::length_mismatch,
                "sequences have " + std::to_string(a.size()) + " and " + std::to_string(b.size()) + " values");
  if (a.empty()) throw Error(ErrorCode::too_short, "euclidean_distance: empty sequences");
  double sum = 0.0;
  for (std::size_t z = 0; z < a.size(); ++z) {
    const double d = a[z] - b[z];
    sum += d * d;
  }
  return std::sqrt(sum);
}

/// (x - mean) / sigma with the population sigma.
inline TimeSeries znormalize(const TimeSeries& series) {
  const auto& x = series.values;
  if (x.size() < 2) throw Error(ErrorCode::too_short, "znormalize needs at least 2 values");
  detail::require_finite(x, "znormalize");
  double sum = 0.0;
  for (double v : x) sum += v;
  const double mean = sum / static_cast<double>(x.size());
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  const double sigma = std::sqrt(ss / static_cast<double>(x.size()));
  if (!(sigma > 0.0)) throw Error(ErrorCode::zero_variance, "znormalize: series is constant");

  TimeSeries out{series.name + "-znorm", {}, series.timestamps};
  out.values.reserve(x.size());
  for (double v : x) out.values.push_back((v - mean) / sigma);
  return out;
}

inline std::string format_offset(double c) {
  std::string s = std::to_string(c);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return (c >= 0 ? "+" : "") + s;
}

/// Every value shifted by `c`; the name gains a "+c" suffix.
inline TimeSeries offset_variant(const TimeSeries& series, double c) {
  TimeSeries out{series.name + format_offset(c), series.values, series.timestamps};
  for (double& v : out.values) v += c;
  return out;
}

/// Every value negated (a sign flip, not a time reversal).
inline TimeSeries reverse_variant(const TimeSeries& series) {
  TimeSeries out{series.name + "-reverse", series.values, series.timestamps};
  for (double& v : out.values) v = -v;
  return out;
}

/// Defaults for the synthetic recurrent series: a 5-minute cadence over 14 days.
struct SineDefaults {
  static constexpr std::size_t n = 4032;
  static constexpr std::size_t period = 288;
  static constexpr double amplitude = 20.0;
};

/// amplitude * sin(2 pi k / period), k = 0..n-1.
inline TimeSeries sine_series(std::size_t n = SineDefaults::n, std::size_t period = SineDefaults::period,
                              double amplitude = SineDefaults::amplitude) {
  if (n < 1) throw Error(ErrorCode::too_short, "sine_series: n must be at least 1");
  if (period < 2) throw Error(ErrorCode::too_short, "sine_series: period must be at least 2");
  TimeSeries out{"sine", {}, {}};
  out.values.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    out.values.push_back(amplitude * std::sin(2.0 * std::numbers::pi * static_cast<double>(k) /
                                              static_cast<double>(period)));
  return out;
}

}  // namespace npfree
