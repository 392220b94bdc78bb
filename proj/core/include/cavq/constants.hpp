#pragma once

#include <numbers>

namespace cavq {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s, exact SI
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace cavq
