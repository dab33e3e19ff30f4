#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "npfree/error.hpp"
#include "npfree/hyperparameters.hpp"

namespace npfree {

/// Values for the last b = 3 indices, oldest first.
using Triple = std::array<double, hyper::look_back>;

/// How the squared terms of the RMSE pair observations with predictions.
/// `pairwise` matches each observation d_z with its own prediction. `literal`
/// compares every observation with the newest prediction only; it is kept for
/// comparison and is not used by the converter.
enum class RmseForm { pairwise, literal };

template <RmseForm Form = RmseForm::pairwise>
double compute_rmse(const Triple& observed, const Triple& predicted) {
  detail::require_finite(observed, "compute_rmse");
  detail::require_finite(predicted, "compute_rmse");
  double sum = 0.0;
  for (std::size_t z = 0; z < observed.size(); ++z) {
    const double p = (Form == RmseForm::pairwise) ? predicted[z] : predicted.back();
    const double e = observed[z] - p;
    sum += e * e;
  }
  return std::sqrt(sum / static_cast<double>(observed.size()));
}

/// Average absolute relative error. Uses |v| in the denominator; a zero
/// observation is an error rather than being smoothed away.
inline double compute_aare(const Triple& observed, const Triple& predicted) {
  detail::require_finite(observed, "compute_aare");
  detail::require_finite(predicted, "compute_aare");
  double sum = 0.0;
  for (std::size_t y = 0; y < observed.size(); ++y) {
    if (observed[y] == 0.0)
      throw Error(ErrorCode::zero_denominator, "compute_aare: observed value is zero");
    sum += std::abs(observed[y] - predicted[y]) / std::abs(observed[y]);
  }
  return sum / static_cast<double>(observed.size());
}

}  // namespace npfree
