#pragma once

namespace spectroham {

/// Absolute tolerance for eigenvalue comparisons and bound boundaries.
inline constexpr double kDefaultEps = 1e-9;

/// kDefaultEps, or the value of SPECTROHAM_EPS when set to a positive number.
/// Read once per process.
double eps();

}  // namespace spectroham
