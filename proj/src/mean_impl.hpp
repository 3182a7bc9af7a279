#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meanlab/mean.hpp"

namespace meanlab::detail {

/// Shortest round-trip decimal form of v.
std::string format_param(double v);

/// |x - target| < kBranchProximity
bool near(double x, double target);

/// Node construction with the parameter clamp enforced.
MeanDescriptor make_parametric(MeanKind kind, std::vector<double> params,
                               std::optional<MeanDescriptor> base = std::nullopt);

}  // namespace meanlab::detail
