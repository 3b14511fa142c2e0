#pragma once

#include <cmath>

namespace zq2 {

inline constexpr double kPi       = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi    = 6.28318530717958647692528676655900577;
inline constexpr double kLn2Pi    = 1.83787706640934548356065947281123527;
// Euler-Mascheroni constant, the "c" of every ladder formula.
inline constexpr double kEulerC   = 0.57721566490153286060651209008240243;

// ln t + c - ln 2pi, the denominator of the second-moment closed form.
inline double ladder_log_factor(double t) {
    return std::log(t) + kEulerC - kLn2Pi;
}

}  // namespace zq2
