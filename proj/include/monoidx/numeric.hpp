#pragma once

#include <algorithm>
#include <cmath>

namespace monoidx {

inline constexpr double kRelTol = 1e-12;
inline constexpr double kAbsFloor = 1e-15;

// |a - b| <= max(abs_floor, rel * max(|a|, |b|))
inline bool approx_equal(double a, double b, double rel = kRelTol,
                         double abs_floor = kAbsFloor) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= std::max(abs_floor, rel * scale);
}

inline double positive_part(double x) { return x > 0.0 ? x : 0.0; }
inline double negative_part(double x) { return x < 0.0 ? -x : 0.0; }

}  // namespace monoidx
