#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "measmean/interval_set.hpp"
#include "measmean/measure.hpp"
#include "measmean/ordinary_mean.hpp"

namespace measmean {

/// How the scale of the x < 1 branch is tied to the x > 1 branch.
enum class Calibration {
  /// Match the one-sided density limits at x = 1; falls back to
  /// probe_pair when either limit is not finite and positive.
  density_limit,
  /// Solve reconstruct(1/2, 2) = K(1/2, 2) for the scale.
  probe_pair,
};

struct BuildOptions {
  int points_per_branch = 2048;
  /// Smallest tabulated |log x|. Closer to 1 the tables are extrapolated
  /// with the asymptotic F ~ c (x - 1)^2 behaviour (linear in log|log x|).
  double min_log_distance = 1e-8;
  Calibration calibration = Calibration::density_limit;
};

/// One side of x = 1, tabulated on a uniform grid in t = log|log x|.
struct MeasureBranch {
  int side = 1;  // +1 for x > 1, -1 for x < 1
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<double> log_F;
  std::vector<double> dlog_F;   // d log F / dt
  std::vector<double> d2log_F;  // d^2 log F / dt^2
  std::vector<double> log_f;    // log |f|
  std::vector<double> log_w;

  std::size_t size() const { return log_F.size(); }
  double t_at(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
  double x_at(std::size_t i) const;
  /// Quintic Hermite interpolation of log F at t; linear extrapolation
  /// outside the table.
  double interpolate_log_F(double t) const;
};

/// Generating measure of a smooth ordinary mean K, synthesized from the
/// section K(1, x) alone.
///
/// For x > 1: log F(x) = ∫_2^x dt / (t - K(1, t)), so F(2) = 1. For x < 1
/// the same integral is anchored at 1/2 and multiplied by left_scale. Then
/// f = F / (x - K(1, x)) and w = ∂K(1, x)/∂x · f / (x - K(1, x)).
/// f(1) = F(1) = 0 are analytic limits; x = 1 is never tabulated.
class ConstructedMeasure
    : public std::enable_shared_from_this<ConstructedMeasure> {
 public:
  /// Throws NotStrictlyInternal / NotSymmetric when K fails the probes or
  /// x - K(1, x) vanishes away from 1, DomainError for a non-positive
  /// section slope or a window outside the mean's domain.
  static std::shared_ptr<const ConstructedMeasure> build(
      const OrdinaryMean& k, double lo, double hi, double tol = 1e-13,
      const BuildOptions& opts = {});

  const OrdinaryMean& mean() const { return mean_; }
  double window_lo() const { return lo_; }
  double window_hi() const { return hi_; }
  double x0() const { return 2.0; }
  double left_anchor() const { return 0.5; }
  double left_scale() const { return left_scale_; }
  Calibration calibration_used() const { return calibration_used_; }
  /// One-sided density limits at 1 after calibration.
  double density_limit_right() const { return limit_right_; }
  double density_limit_left() const { return limit_left_; }
  const MeasureBranch* right() const { return right_ ? &*right_ : nullptr; }
  const MeasureBranch* left() const { return left_ ? &*left_ : nullptr; }

  double F(double x) const;
  double f(double x) const;
  double w(double x) const;

  /// Monotonicity of w over the tabulated nodes inside the window.
  DensityShape shape() const;

  /// A MeasureSpec sharing ownership of this table.
  MeasureSpec spec() const;

 private:
  ConstructedMeasure(OrdinaryMean k, double lo, double hi)
      : mean_(std::move(k)), lo_(lo), hi_(hi) {}

  double gap(double x) const { return x - mean_.section(x); }
  double raw_F(int side, double x) const;
  double raw_w(int side, double x) const;
  double one_sided_limit(int side) const;
  double density_limit_scale() const;
  double calibrate_by_probe_pair() const;

  OrdinaryMean mean_;
  double lo_;
  double hi_;
  std::optional<MeasureBranch> right_;
  std::optional<MeasureBranch> left_;
  double left_scale_ = 1.0;
  double limit_right_ = 0.0;
  double limit_left_ = 0.0;
  Calibration calibration_used_ = Calibration::density_limit;
};

/// build(K) as a MeasureSpec over the closed window [lo, hi].
MeasureSpec build(const OrdinaryMean& k, double lo, double hi,
                  double tol = 1e-13, const BuildOptions& opts = {});

/// (b f(b) - a f(a) - (F(b) - F(a))) / (f(b) - f(a)) from the measure's f and
/// F. Throws DomainError when [a, b] leaves the domain or f, F are absent.
double reconstruct(const MeasureSpec& spec, double a, double b);

/// K(a, b) from the section g(x) = K(1, x) and the constructed f, using
/// f(1) = 0: (f(b) g(b) - f(a) g(a)) / (f(b) - f(a)).
double from_section(const std::function<double(double)>& g,
                    const ConstructedMeasure& m, double a, double b);

/// The ordinary mean generated by an increasing f with primitive F.
/// Throws NotIncreasing when f(b) <= f(a).
double mean_from_fF(const std::function<double(double)>& f,
                    const std::function<double(double)>& F, double a,
                    double b);

struct UniquenessResult {
  bool proportional = false;
  double c = 0.0;
  /// Relative spread of μ_B(P)/μ_A(P) across the probes.
  double spread = 0.0;
  IntervalSet witness;
  double mean_a = 0.0;
  double mean_b = 0.0;
};

/// If the two means agree on every probe (within 1e-9) the ratio
/// μ_B(P)/μ_A(P) must be constant (within 1e-6 relative); returns that
/// constant. Otherwise returns the first discrepant probe.
UniquenessResult uniqueness_check(const MeasureSpec& a, const MeasureSpec& b,
                                  std::span<const IntervalSet> probes);

}  // namespace measmean
