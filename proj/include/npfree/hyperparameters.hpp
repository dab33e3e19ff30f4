#pragma once

#include <cstddef>
#include <cstdint>

namespace npfree {

// Fixed network and stream settings. Nothing here is configurable at run time:
// identical input must always produce identical output.
namespace hyper {

inline constexpr std::size_t hidden_layers = 1;
inline constexpr std::size_t hidden_units = 10;
inline constexpr std::size_t epochs = 50;
inline constexpr double learning_rate = 0.005;
inline constexpr std::uint64_t random_seed = 140;
inline constexpr std::size_t look_back = 3;
inline constexpr std::size_t sliding_window = 1440;

// Hidden-state activation. Gates use the logistic sigmoid.
enum class Activation { tanh };
inline constexpr Activation activation = Activation::tanh;

}  // namespace hyper

}  // namespace npfree
