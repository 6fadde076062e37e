#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace uds {

/// Shortest decimal form that parses back to exactly the same double
/// ("10.4", "16", "11.2").
inline std::string format_decimal(double value) {
  char buf[32];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

}  // namespace uds
