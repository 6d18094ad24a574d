#pragma once

#include <random>

#include "measmean/interval_set.hpp"

namespace measmean {

using Rng = std::mt19937_64;

/// A point drawn from (lo, hi); log-uniform when lo > 0, uniform otherwise.
double random_point(Rng& rng, double lo, double hi);

/// A nondegenerate interval inside (lo, hi).
IntervalSet random_interval(Rng& rng, double lo, double hi);

/// A union of between min_parts and max_parts disjoint nondegenerate
/// intervals inside (lo, hi).
IntervalSet random_union(Rng& rng, double lo, double hi, int min_parts,
                         int max_parts);

}  // namespace measmean
