#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace sombor {

/// Truncates toward zero at the given number of decimals. A small guard keeps
/// values such as 0.29999999 (binary noise on 0.3) from dropping a digit.
inline double truncate_decimals(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double guard = 1e-7;
  return std::trunc(x * scale + (x >= 0 ? guard : -guard)) / scale;
}

/// Fixed-point text with truncated (not rounded) trailing digit; never prints "-0.000".
inline std::string format_value(double x, int precision = 4) {
  double t = truncate_decimals(x, precision);
  if (t == 0.0) t = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, t);
  return buf;
}

}  // namespace sombor
