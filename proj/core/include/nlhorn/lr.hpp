#pragma once

#include "nlhorn/partition.hpp"

namespace nlhorn {

/// Littlewood-Richardson coefficient c^lambda_{mu,nu}, counted by backtracking
/// over lattice skew tableaux of shape lambda/mu and content nu. Memoized.
long long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda);

/// Positivity of c^lambda_{mu,nu}; the search stops at the first completed
/// tableau. Memoized separately from the full count.
bool lr_positive(const Partition& mu, const Partition& nu, const Partition& lambda);

/// Independent positivity oracle via the recursive Horn criterion: subset
/// inequalities all the way down, no tableau search on any path. Throws
/// std::invalid_argument unless |lambda| == |mu| + |nu|.
bool lr_positive_horn(const Partition& mu, const Partition& nu, const Partition& lambda);

/// Drops every memoized entry (tests and benchmarks).
void lr_clear_caches();

}  // namespace nlhorn
