#pragma once

#include <cstddef>
#include <functional>

namespace measmean {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  std::size_t max_panels = 10000;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of fn over [a, b].
///
/// Panels are bisected in order of largest local error |K15 - G7| until the
/// summed estimate drops below max(abs_tol, rel_tol * |value|). Throws
/// QuadratureError (carrying the partial result) when the panel budget is
/// exhausted, InvalidInterval when a >= b, and DomainError if fn returns a
/// non-finite value.
QuadratureResult quad(const std::function<double(double)>& fn, double a,
                      double b, const QuadratureOptions& opts = {});

inline QuadratureResult quad(const std::function<double(double)>& fn,
                             double a, double b, double abs_tol,
                             double rel_tol) {
  return quad(fn, a, b, QuadratureOptions{abs_tol, rel_tol, 10000});
}

}  // namespace measmean
