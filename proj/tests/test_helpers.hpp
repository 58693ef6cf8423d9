#pragma once

#include <algorithm>
#include <cmath>

inline double rel_err(double a, double b, double floor = 0.0) {
  const double s = std::max({std::abs(a), std::abs(b), floor});
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}
