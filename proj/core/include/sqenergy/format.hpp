#pragma once

#include <string>

namespace sqe {

// A value whose 6-decimal rounding would flip under a perturbation of this
// size is flagged.
inline constexpr double kRoundingBoundaryThreshold = 1e-9;

/// Fixed 6-decimal rendering; negative zero prints as 0.000000.
std::string format_fixed6(double x);

/// True when x lies within `threshold` of a point halfway between two
/// 6-decimal grid values.
bool near_rounding_boundary(double x, double threshold = kRoundingBoundaryThreshold);

}  // namespace sqe
