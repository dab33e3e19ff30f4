#pragma once

// Single-layer LSTM with a linear readout, trained from scratch by plain
// full-batch gradient descent. Every training run starts from the same seeded
// initialization, so train() is a pure function of its 3-point window.
//
//   i = sigmoid(Wx_i x + Wh_i h + b_i)
//   f = sigmoid(Wx_f x + Wh_f h + b_f)
//   g = tanh   (Wx_g x + Wh_g h + b_g)
//   o = sigmoid(Wx_o x + Wh_o h + b_o)
//   c' = f * c + i * g
//   h' = o * tanh(c')
//   y  = w . h' + b_y

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "npfree/error.hpp"
#include "npfree/hyperparameters.hpp"

namespace npfree {

inline constexpr std::size_t kHidden = hyper::hidden_units;
inline constexpr std::size_t kGates = 4;

enum Gate : std::size_t { input_gate = 0, forget_gate = 1, cell_gate = 2, output_gate = 3 };

/// The b = 3 consecutive raw values a model is trained on or predicts from.
struct TrainingWindow {
  std::array<double, hyper::look_back> values{};

  friend bool operator==(const TrainingWindow&, const TrainingWindow&) = default;
};

/// Deterministic 64-bit generator (Steele, Lea, Flood). Fully specified, so a
/// seed maps to the same stream on every platform and standard library.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) built from the top 53 bits.
  constexpr double uniform01() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [-bound, bound).
  constexpr double symmetric(double bound) noexcept {
    return bound * (2.0 * uniform01() - 1.0);
  }

 private:
  std::uint64_t state_;
};

/// All trainable parameters. The same layout doubles as the gradient type.
struct LstmModel {
  using Vec = std::array<double, kHidden>;
  using Mat = std::array<Vec, kHidden>;  // [unit][source unit]

  std::array<Vec, kGates> input_weights{};
  std::array<Mat, kGates> recurrent_weights{};
  std::array<Vec, kGates> gate_bias{};
  Vec readout_weights{};
  double readout_bias = 0.0;

  static constexpr std::size_t parameter_count =
      kGates * kHidden + kGates * kHidden * kHidden + kGates * kHidden + kHidden + 1;

  /// Visits every parameter in a fixed order.
  template <typename F>
  void for_each_parameter(F&& f) {
    for (auto& gate : input_weights)
      for (double& w : gate) f(w);
    for (auto& gate : recurrent_weights)
      for (auto& row : gate)
        for (double& w : row) f(w);
    for (auto& gate : gate_bias)
      for (double& w : gate) f(w);
    for (double& w : readout_weights) f(w);
    f(readout_bias);
  }

  template <typename F>
  void for_each_parameter(F&& f) const {
    const_cast<LstmModel*>(this)->for_each_parameter(
        [&f](double& w) { f(static_cast<const double&>(w)); });
  }

  bool all_finite() const {
    bool ok = true;
    for_each_parameter([&ok](double w) { ok = ok && std::isfinite(w); });
    return ok;
  }

  friend bool operator==(const LstmModel&, const LstmModel&) = default;
};

using LstmGradients = LstmModel;

namespace detail {

inline double sigmoid(double x) noexcept { return 1.0 / (1.0 + std::exp(-x)); }

struct StepCache {
  double x = 0.0;
  LstmModel::Vec h_prev{}, c_prev{};
  std::array<LstmModel::Vec, kGates> act{};  // post-activation gate values
  LstmModel::Vec c{}, tanh_c{}, h{};
  double y = 0.0;
};

inline void forward_step(const LstmModel& m, double x, const LstmModel::Vec& h_prev,
                         const LstmModel::Vec& c_prev, StepCache& out) {
  out.x = x;
  out.h_prev = h_prev;
  out.c_prev = c_prev;
  for (std::size_t k = 0; k < kGates; ++k) {
    for (std::size_t u = 0; u < kHidden; ++u) {
      double a = m.input_weights[k][u] * x + m.gate_bias[k][u];
      const auto& row = m.recurrent_weights[k][u];
      for (std::size_t v = 0; v < kHidden; ++v) a += row[v] * h_prev[v];
      out.act[k][u] = (k == cell_gate) ? std::tanh(a) : sigmoid(a);
    }
  }
  double y = m.readout_bias;
  for (std::size_t u = 0; u < kHidden; ++u) {
    out.c[u] = out.act[forget_gate][u] * c_prev[u] + out.act[input_gate][u] * out.act[cell_gate][u];
    out.tanh_c[u] = std::tanh(out.c[u]);
    out.h[u] = out.act[output_gate][u] * out.tanh_c[u];
    y += m.readout_weights[u] * out.h[u];
  }
  out.y = y;
}

/// Runs the network from zero state over `inputs`, caching every step.
inline std::vector<StepCache> forward_sequence(const LstmModel& m, std::span<const double> inputs) {
  std::vector<StepCache> steps(inputs.size());
  LstmModel::Vec h{}, c{};
  for (std::size_t t = 0; t < inputs.size(); ++t) {
    forward_step(m, inputs[t], h, c, steps[t]);
    h = steps[t].h;
    c = steps[t].c;
  }
  return steps;
}

}  // namespace detail

struct LossAndGradients {
  double loss = 0.0;
  LstmGradients gradients{};
};

/// Squared-error loss summed over every step of a teacher-forced sequence,
/// and its exact gradient by backpropagation through time.
inline LossAndGradients sequence_loss_gradients(const LstmModel& m, std::span<const double> inputs,
                                                std::span<const double> targets) {
  if (inputs.size() != targets.size())
    throw Error(ErrorCode::length_mismatch, "inputs and targets differ in length");

  const auto steps = detail::forward_sequence(m, inputs);
  LossAndGradients out;
  LstmGradients& g = out.gradients;

  LstmModel::Vec dh_next{}, dc_next{};
  for (std::size_t t = steps.size(); t-- > 0;) {
    const auto& s = steps[t];
    const double err = s.y - targets[t];
    out.loss += err * err;
    const double dy = 2.0 * err;

    g.readout_bias += dy;
    std::array<LstmModel::Vec, kGates> dpre{};
    LstmModel::Vec dc_prev{};
    for (std::size_t u = 0; u < kHidden; ++u) {
      g.readout_weights[u] += dy * s.h[u];
      const double dh = dy * m.readout_weights[u] + dh_next[u];
      const double i = s.act[input_gate][u];
      const double f = s.act[forget_gate][u];
      const double cg = s.act[cell_gate][u];
      const double o = s.act[output_gate][u];

      const double d_o = dh * s.tanh_c[u];
      const double dc = dh * o * (1.0 - s.tanh_c[u] * s.tanh_c[u]) + dc_next[u];
      dpre[input_gate][u] = dc * cg * i * (1.0 - i);
      dpre[forget_gate][u] = dc * s.c_prev[u] * f * (1.0 - f);
      dpre[cell_gate][u] = dc * i * (1.0 - cg * cg);
      dpre[output_gate][u] = d_o * o * (1.0 - o);
      dc_prev[u] = dc * f;
    }

    LstmModel::Vec dh_prev{};
    for (std::size_t k = 0; k < kGates; ++k) {
      for (std::size_t u = 0; u < kHidden; ++u) {
        const double d = dpre[k][u];
        g.input_weights[k][u] += d * s.x;
        g.gate_bias[k][u] += d;
        auto& grow = g.recurrent_weights[k][u];
        const auto& wrow = m.recurrent_weights[k][u];
        for (std::size_t v = 0; v < kHidden; ++v) {
          grow[v] += d * s.h_prev[v];
          dh_prev[v] += d * wrow[v];
        }
      }
    }
    dh_next = dh_prev;
    dc_next = dc_prev;
  }
  return out;
}

/// Xavier-uniform weights from a SplitMix64 stream; all biases zero.
/// Draw order: input weights, recurrent weights, readout weights.
inline LstmModel init_model(std::uint64_t seed) {
  SplitMix64 rng(seed);
  LstmModel m;
  const double input_bound = std::sqrt(6.0 / static_cast<double>(1 + kHidden));
  const double recurrent_bound = std::sqrt(6.0 / static_cast<double>(kHidden + kHidden));
  const double readout_bound = std::sqrt(6.0 / static_cast<double>(kHidden + 1));
  for (auto& gate : m.input_weights)
    for (double& w : gate) w = rng.symmetric(input_bound);
  for (auto& gate : m.recurrent_weights)
    for (auto& row : gate)
      for (double& w : row) w = rng.symmetric(recurrent_bound);
  for (double& w : m.readout_weights) w = rng.symmetric(readout_bound);
  return m;
}

/// Training inputs (d0, d1) and next-step targets (d1, d2) for a window.
struct TeacherForcedPairs {
  std::array<double, hyper::look_back - 1> inputs{};
  std::array<double, hyper::look_back - 1> targets{};
};

inline TeacherForcedPairs make_pairs(const TrainingWindow& w) {
  TeacherForcedPairs p;
  for (std::size_t k = 0; k + 1 < hyper::look_back; ++k) {
    p.inputs[k] = w.values[k];
    p.targets[k] = w.values[k + 1];
  }
  return p;
}

inline double training_loss(const LstmModel& m, const TrainingWindow& w) {
  detail::require_finite(w.values, "training_loss");
  const auto p = make_pairs(w);
  const auto steps = detail::forward_sequence(m, p.inputs);
  double loss = 0.0;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    const double e = steps[t].y - p.targets[t];
    loss += e * e;
  }
  return loss;
}

/// Analytic gradient of training_loss with respect to every parameter.
inline LstmGradients gradients(const LstmModel& m, const TrainingWindow& w) {
  detail::require_finite(w.values, "gradients");
  const auto p = make_pairs(w);
  return sequence_loss_gradients(m, p.inputs, p.targets).gradients;
}

/// Descends `model` in place for the fixed number of epochs.
inline void fit(LstmModel& model, const TrainingWindow& w) {
  const auto p = make_pairs(w);
  for (std::size_t epoch = 0; epoch < hyper::epochs; ++epoch) {
    const auto g = sequence_loss_gradients(model, p.inputs, p.targets).gradients;
    std::array<double, LstmModel::parameter_count> flat{};
    std::size_t idx = 0;
    g.for_each_parameter([&](double v) { flat[idx++] = v; });
    idx = 0;
    model.for_each_parameter([&](double& v) { v -= hyper::learning_rate * flat[idx++]; });
  }
}

/// A fresh init_model(140) trained on the window.
inline LstmModel train(const TrainingWindow& w) {
  detail::require_finite(w.values, "train");
  LstmModel model = init_model(hyper::random_seed);
  fit(model, w);
  return model;
}

/// One-step-ahead forecast: readout after the whole window, from zero state.
inline double predict(const LstmModel& m, const TrainingWindow& w) {
  detail::require_finite(w.values, "predict");
  LstmModel::Vec h{}, c{};
  detail::StepCache s;
  for (double x : w.values) {
    detail::forward_step(m, x, h, c, s);
    h = s.h;
    c = s.c;
  }
  return s.y;
}

}  // namespace npfree
