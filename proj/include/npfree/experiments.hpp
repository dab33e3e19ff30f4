#pragma once

// Experiment drivers behind `npfree experiment`.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <future>
#include <string>
#include <vector>

#include "npfree/converter.hpp"
#include "npfree/series.hpp"

namespace npfree::experiments {

/// +100 ... +1000, then +1500 and +2000.
inline std::vector<double> standard_offsets() {
  std::vector<double> c;
  for (int k = 1; k <= 10; ++k) c.push_back(100.0 * k);
  c.push_back(1500.0);
  c.push_back(2000.0);
  return c;
}

struct VariantDistance {
  std::string name;
  double distance = 0.0;
  RmseSeries rmse;
};

struct OffsetResult {
  RmseSeries base;
  std::vector<VariantDistance> variants;
};

/// Converts the series and each offset variant (each on its own task) and
/// measures every variant's RMSE series against the original's.
inline OffsetResult offsets(const TimeSeries& series, const std::vector<double>& cs = standard_offsets()) {
  auto base_job = std::async(std::launch::async, [&] { return convert(series); });
  std::vector<std::future<RmseSeries>> jobs;
  std::vector<TimeSeries> variants;
  variants.reserve(cs.size());
  for (double c : cs) variants.push_back(offset_variant(series, c));
  for (const auto& v : variants) jobs.push_back(std::async(std::launch::async, [&v] { return convert(v); }));

  OffsetResult out;
  out.base = base_job.get();
  const auto base_values = out.base.values();
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    RmseSeries r = jobs[k].get();
    const double d = euclidean_distance(base_values, r.values());
    out.variants.push_back({variants[k].name, d, std::move(r)});
  }
  return out;
}

struct OppositeResult {
  std::vector<VariantDistance> similar;  // offset pairs
  double opposite_distance = 0.0;        // against the sign-flipped series
  double worst_ratio = 0.0;              // max similar / opposite
};

/// Similar (offset) pairs against the opposite-pattern pair.
inline OppositeResult opposite(const TimeSeries& series, const std::vector<double>& cs = {100.0, 1000.0}) {
  OppositeResult out;
  const auto sim = offsets(series, cs);
  const auto reversed = convert(reverse_variant(series));
  out.opposite_distance = euclidean_distance(sim.base.values(), reversed.values());
  for (const auto& v : sim.variants) {
    out.worst_ratio = std::max(out.worst_ratio, v.distance / out.opposite_distance);
    out.similar.push_back(v);
  }
  return out;
}

struct ZnormDemo {
  TimeSeries original;
  TimeSeries affine;
  TimeSeries original_z;
  TimeSeries affine_z;
  double raw_distance = 0.0;
  double max_z_difference = 0.0;
};

/// A series and scale * series + shift: far apart raw, identical once
/// z-normalized.
inline ZnormDemo znorm_demo(const TimeSeries& series, double scale = 2.0, double shift = 7.0) {
  ZnormDemo d;
  d.original = series;
  d.affine = series;
  d.affine.name = series.name + "-affine";
  for (double& v : d.affine.values) v = scale * v + shift;
  d.original_z = znormalize(d.original);
  d.affine_z = znormalize(d.affine);
  d.raw_distance = euclidean_distance(d.original.values, d.affine.values);
  for (std::size_t k = 0; k < series.size(); ++k)
    d.max_z_difference = std::max(d.max_z_difference, std::abs(d.original_z.values[k] - d.affine_z.values[k]));
  return d;
}

}  // namespace npfree::experiments
