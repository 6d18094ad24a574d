#include "measmean/random_sets.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace measmean {

double random_point(Rng& rng, double lo, double hi) {
  if (lo > 0.0) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::clamp(std::exp(u(rng)), lo, hi);
  }
  std::uniform_real_distribution<double> u(lo, hi);
  return u(rng);
}

IntervalSet random_interval(Rng& rng, double lo, double hi) {
  for (;;) {
    double a = random_point(rng, lo, hi);
    double b = random_point(rng, lo, hi);
    if (a > b) std::swap(a, b);
    if (a < b) return IntervalSet::single(a, b);
  }
}

IntervalSet random_union(Rng& rng, double lo, double hi, int min_parts,
                         int max_parts) {
  std::uniform_int_distribution<int> count(min_parts, max_parts);
  for (;;) {
    const int k = count(rng);
    std::vector<double> pts(static_cast<std::size_t>(2 * k));
    for (auto& p : pts) p = random_point(rng, lo, hi);
    std::sort(pts.begin(), pts.end());
    // Strict separation so that the parts stay distinct after normalizing.
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) continue;
    std::vector<Interval> parts;
    for (int i = 0; i < k; ++i) {
      parts.push_back({pts[static_cast<std::size_t>(2 * i)],
                       pts[static_cast<std::size_t>(2 * i + 1)]});
    }
    return IntervalSet::normalize(std::move(parts));
  }
}

}  // namespace measmean
