#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "measmean/interval_set.hpp"
#include "measmean/quadrature.hpp"

namespace measmean {

using RealFn = std::function<double(double)>;
using IncrementFn = std::function<double(double, double)>;

/// Monotonicity of a density over its domain. `constant` satisfies both
/// directions at once.
enum class DensityShape { increasing, decreasing, constant, none };

std::string_view to_string(DensityShape shape);

/// Support of a measure. Infinite ends are always open.
struct Domain {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(double x) const;
  bool contains(const IntervalSet& h) const;
};

/// Absolutely continuous Borel measure μ given by its density w = dμ/dλ,
/// optionally its distribution function f (f' = w) and a primitive F of f.
///
/// The density is strictly positive on the open domain. mass_increment and
/// moment_increment, when set, are algebraically identical but cancellation
/// free forms of f(b) - f(a) and [x f - F]_a^b.
struct MeasureSpec {
  std::string name;
  Domain domain;
  RealFn density;
  std::optional<RealFn> cdf;
  std::optional<RealFn> antiderivative;
  DensityShape density_shape = DensityShape::none;
  std::optional<IncrementFn> mass_increment;
  std::optional<IncrementFn> moment_increment;
};

/// μ(H) and ∫_H x dμ with their numeric error bounds.
struct Moments {
  double mass = 0.0;
  double moment = 0.0;
  double mass_err = 0.0;
  double moment_err = 0.0;
};

/// Throws DomainError if nonempty h leaves the domain of spec.
void require_in_domain(const MeasureSpec& spec, const IntervalSet& h);

Moments moments(const MeasureSpec& spec, const IntervalSet& h,
                const QuadratureOptions& opts = {});

/// μ(H). Zero for the empty set.
double mu(const MeasureSpec& spec, const IntervalSet& h);

/// ∫_H x dμ.
double first_moment(const MeasureSpec& spec, const IntervalSet& h);

/// The same measure multiplied by c > 0.
MeasureSpec scaled(const MeasureSpec& spec, double c);

/// Probe-grid check of the MeasureSpec invariants: positive density, and
/// F' ≈ f, f' ≈ w (central differences, relative rel_tol) where present.
/// Throws DomainError describing the first violation.
void validate(const MeasureSpec& spec, double lo, double hi,
              int n_probe = 64, double rel_tol = 1e-6);

enum class CertificateStatus { certified, refuted, inconclusive };

std::string_view to_string(CertificateStatus status);

struct RatioCertificate {
  CertificateStatus status = CertificateStatus::inconclusive;
  // Witness of a decrease: x1 < x2 with ratio(x1) > ratio(x2).
  double x1 = 0.0;
  double x2 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

/// Checks that w_numer / w_denom is nondecreasing on (lo, hi) using an
/// interior probe grid (geometric when lo > 0). A decrease on the grid
/// refutes. A monotone grid certifies only when both densities declare a
/// shape; otherwise the answer is inconclusive.
RatioCertificate density_ratio_increasing(const MeasureSpec& numer,
                                          const MeasureSpec& denom, double lo,
                                          double hi, int n_probe = 512);

/// Strictly increasing interior probe abscissae for (lo, hi).
std::vector<double> probe_grid(double lo, double hi, int n);

}  // namespace measmean
