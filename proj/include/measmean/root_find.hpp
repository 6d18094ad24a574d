#pragma once

#include <functional>

namespace measmean {

struct RootResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Bracketed root of a continuous function with fn(lo), fn(hi) of opposite
/// sign. Illinois-style false position, falling back to bisection whenever
/// the secant step stalls. Throws DomainError if the bracket is invalid.
RootResult find_root(const std::function<double(double)>& fn, double lo,
                     double hi, double xtol = 1e-14, int max_iter = 200);

}  // namespace measmean
