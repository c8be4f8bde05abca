#pragma once

#include <vector>

namespace nlhorn {

/// Exact-rational feasibility test: is `target` a nonnegative combination of
/// `generators`? All vectors must share one dimension. Phase-1 simplex with
/// Bland's rule, so it terminates on degenerate cones.
bool in_nonneg_cone(const std::vector<std::vector<long long>>& generators,
                    const std::vector<long long>& target);

}  // namespace nlhorn
