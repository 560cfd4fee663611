#include "sqenergy/format.hpp"

#include <cmath>

#include <fmt/format.h>

namespace sqe {

std::string format_fixed6(double x) {
  auto s = fmt::format("{:.6f}", x);
  if (s == "-0.000000") s.erase(0, 1);
  return s;
}

bool near_rounding_boundary(double x, double threshold) {
  const double scaled = x * 1e6;
  const double frac = scaled - std::floor(scaled);
  return std::abs(frac - 0.5) * 1e-6 <= threshold;
}

}  // namespace sqe
