#pragma once

// Retrain-on-demand forecasting loop shared by the converter and the detector.
//
// Every incoming value advances time by one index. The first two values are
// only buffered; from index 2 a model is trained on the latest 3 values and
// forecasts the next one. From index 5 each step yields a prediction error over
// the last 3 indices. From index 7 the error is checked against a three-sigma
// threshold; a breach triggers a retrain on the previous 3 values, and a retrain
// that still breaches defers to a forced retrain at the next index.
//
// The Metric policy supplies:
//   static double error(const Triple& observed, const Triple& predicted);
//   static constexpr std::size_t window;  // 0 = use the whole history

#include <array>
#include <concepts>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "npfree/error.hpp"
#include "npfree/hyperparameters.hpp"
#include "npfree/lstm.hpp"
#include "npfree/metrics.hpp"
#include "npfree/threshold.hpp"

namespace npfree {

template <typename M>
concept ErrorMetric = requires(const Triple& a, const Triple& b) {
  { M::error(a, b) } -> std::convertible_to<double>;
  { M::window } -> std::convertible_to<std::size_t>;
};

inline constexpr std::size_t kFirstErrorIndex = 2 * hyper::look_back - 1;  // 5
inline constexpr std::size_t kFirstThresholdIndex = 2 * hyper::look_back + 1;  // 7

/// Everything the loop decided at one index with t >= 5.
struct StepRecord {
  std::size_t t = 0;
  double error = 0.0;                    // final error after any retrain
  std::optional<ThresholdStats> stats;   // absent while t < 7
  bool retrained = false;                // a model was trained during this step
  bool exceeded = false;                 // final error > threshold
};

template <ErrorMetric Metric>
class AdaptiveForecaster {
 public:
  /// Consumes the value for the next index. Returns a record for t >= 5.
  std::optional<StepRecord> step(double value) {
    const double v[1] = {value};
    detail::require_finite(v, "step");
    // Metric::error may throw (e.g. a zero observation for AARE); every other
    // member is only touched after the last error evaluation, so restoring
    // the raw buffer and the index leaves the state as it was.
    const std::deque<double> saved = observed_;
    const std::size_t saved_t = t_;
    try {
      return advance(value);
    } catch (...) {
      observed_ = saved;
      t_ = saved_t;
      throw;
    }
  }

  /// Same as step(value), but checks that `t` is the next expected index.
  std::optional<StepRecord> step(std::size_t t, double value) {
    if (t != t_)
      throw Error(ErrorCode::out_of_order,
                  "expected index " + std::to_string(t_) + ", got " + std::to_string(t));
    return step(value);
  }

  std::size_t next_index() const noexcept { return t_; }
  bool flag() const noexcept { return flag_; }
  const std::optional<LstmModel>& model() const noexcept { return model_; }
  const std::deque<double>& history() const noexcept { return history_; }

 private:
  std::optional<StepRecord> advance(double value) {
    if (observed_.size() == 4) observed_.pop_front();
    observed_.push_back(value);
    const std::size_t t = t_++;

    if (t < hyper::look_back - 1) return std::nullopt;

    if (t < kFirstErrorIndex) {
      bootstrap(t);
      return std::nullopt;
    }

    if (t < kFirstThresholdIndex) {
      const double err = Metric::error(observed_triple(), predicted_triple(t));
      bootstrap(t);
      commit(err);
      return StepRecord{t, err, std::nullopt, true, false};
    }

    return flag_ ? step_with_current_model(t) : step_with_pending_retrain(t);
  }

  // Train on the latest window and forecast index t + 1.
  void bootstrap(std::size_t t) {
    const TrainingWindow w = latest_window();
    model_ = train(w);
    store_prediction(t + 1, predict(*model_, w));
  }

  StepRecord step_with_current_model(std::size_t t) {
    const TrainingWindow previous = previous_window();
    // At t = 7 the forecast made at t = 6 is still current.
    double forecast = (t == kFirstThresholdIndex) ? prediction_for(t) : predict(*model_, previous);
    double err = Metric::error(observed_triple(), predicted_triple(t, forecast));
    ThresholdStats stats = threshold_with(err);
    bool retrained = false;
    bool exceeded = false;
    if (err > stats.threshold) {
      // The model trained here only re-forecasts index t; it does not replace
      // the current model.
      const LstmModel fresh = train(previous);
      forecast = predict(fresh, previous);
      err = Metric::error(observed_triple(), predicted_triple(t, forecast));
      stats = threshold_with(err);
      retrained = true;
      exceeded = err > stats.threshold;
    }
    store_prediction(t, forecast);
    commit(err);
    if (exceeded) flag_ = false;
    return StepRecord{t, err, stats, retrained, exceeded};
  }

  StepRecord step_with_pending_retrain(std::size_t t) {
    const TrainingWindow previous = previous_window();
    LstmModel fresh = train(previous);
    const double forecast = predict(fresh, previous);
    const double err = Metric::error(observed_triple(), predicted_triple(t, forecast));
    const ThresholdStats stats = threshold_with(err);
    const bool exceeded = err > stats.threshold;
    store_prediction(t, forecast);
    commit(err);
    if (!exceeded) {
      model_ = std::move(fresh);
      flag_ = true;
    }
    return StepRecord{t, err, stats, true, exceeded};
  }

  // Statistics over the history plus a candidate value for the current index,
  // limited to the newest Metric::window values when the window is non-zero.
  ThresholdStats threshold_with(double candidate) const {
    scratch_.assign(history_.begin(), history_.end());
    scratch_.push_back(candidate);
    return Metric::window == 0 ? compute_aare_threshold(scratch_)
                               : compute_threshold(scratch_, Metric::window);
  }

  void commit(double err) {
    history_.push_back(err);
    if (Metric::window != 0 && history_.size() > Metric::window) history_.pop_front();
  }

  TrainingWindow latest_window() const {
    const std::size_t n = observed_.size();
    return {{observed_[n - 3], observed_[n - 2], observed_[n - 1]}};
  }

  // The 3 values before the current one (requires 4 buffered values).
  TrainingWindow previous_window() const { return {{observed_[0], observed_[1], observed_[2]}}; }

  Triple observed_triple() const {
    const TrainingWindow w = latest_window();
    return w.values;
  }

  void store_prediction(std::size_t index, double value) {
    predictions_[index % predictions_.size()] = {index, value};
  }

  double prediction_for(std::size_t index) const {
    const auto& slot = predictions_[index % predictions_.size()];
    if (!slot.has_value() || slot->index != index)
      throw Error(ErrorCode::out_of_order, "no forecast stored for index " + std::to_string(index));
    return slot->value;
  }

  Triple predicted_triple(std::size_t t) const {
    return {prediction_for(t - 2), prediction_for(t - 1), prediction_for(t)};
  }

  Triple predicted_triple(std::size_t t, double current) const {
    return {prediction_for(t - 2), prediction_for(t - 1), current};
  }

  struct Forecast {
    std::size_t index;
    double value;
  };

  std::size_t t_ = 0;
  bool flag_ = true;
  std::optional<LstmModel> model_;
  std::deque<double> observed_;                   // last 4 raw values
  std::array<std::optional<Forecast>, 4> predictions_{};
  std::deque<double> history_;
  mutable std::vector<double> scratch_;
};

}  // namespace npfree
