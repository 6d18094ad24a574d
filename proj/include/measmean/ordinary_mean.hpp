#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace measmean {

/// A two-argument mean K(a, b) on a subinterval of (0, inf) or the reals.
///
/// section_deriv, when present, is ∂K(1, b)/∂b. Without it callers fall
/// back to central differences.
struct OrdinaryMean {
  std::string name;
  std::function<double(double, double)> eval;
  std::optional<std::function<double(double)>> section_deriv;
  double domain_lo = 0.0;
  double domain_hi = std::numeric_limits<double>::infinity();

  double operator()(double a, double b) const { return eval(a, b); }
  /// g(x) = K(1, x).
  double section(double x) const { return eval(1.0, x); }
  /// ∂K(1, b)/∂b, analytic when available.
  double section_slope(double b) const;
};

/// arithmetic, geometric, harmonic, logarithmic, or power:p. Throws
/// UnknownMean.
OrdinaryMean ordinary_mean(std::string_view name);

/// Power mean ((a^p + b^p)/2)^(1/p); p = 0 is the geometric mean.
OrdinaryMean power_mean(double p);

/// Probes symmetry (within 1e-12 relative) and strict internality on
/// pairs from (lo, hi). Throws NotSymmetric / NotStrictlyInternal.
void check_mean(const OrdinaryMean& k, double lo, double hi,
                int n_probe = 64);

}  // namespace measmean
