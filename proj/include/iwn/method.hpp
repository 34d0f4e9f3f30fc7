#pragma once

#include <optional>
#include <string_view>

namespace iwn {

/// The three community-detection strategies.
///   Classic  - interval gains (signed difference D), interval-sum aggregation
///   Hybrid   - midpoint gains, min-max interval aggregation
///   Midpoint - degenerate-interval baseline: midpoint gains, sum aggregation
enum class Method { Classic, Hybrid, Midpoint };

/// "cl", "hl", "midpoint".
std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

/// True when the optimisation phase works on midpoints.
inline bool uses_scalar_gain(Method m) { return m != Method::Classic; }

}  // namespace iwn
