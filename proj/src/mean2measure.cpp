#include "measmean/mean2measure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "measmean/errors.hpp"
#include "measmean/gen_mean.hpp"
#include "measmean/quadrature.hpp"
#include "measmean/root_find.hpp"

namespace measmean {

namespace {

// t = log|log x| of both anchors, x0 = 2 and x0' = 1/2.
const double kAnchorT = std::log(std::log(2.0));

double quintic_hermite(double y0, double d0, double s0, double y1, double d1,
                       double s1, double h, double s) {
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double s4 = s3 * s;
  const double s5 = s4 * s;
  const double h0 = 1 - 10 * s3 + 15 * s4 - 6 * s5;
  const double h1 = s - 6 * s3 + 8 * s4 - 3 * s5;
  const double h2 = 0.5 * s2 - 1.5 * s3 + 1.5 * s4 - 0.5 * s5;
  const double h3 = 0.5 * s3 - s4 + 0.5 * s5;
  const double h4 = -4 * s3 + 7 * s4 - 3 * s5;
  const double h5 = 10 * s3 - 15 * s4 + 6 * s5;
  return y0 * h0 + h * d0 * h1 + h * h * s0 * h2 + h * h * s1 * h3 +
         h * d1 * h4 + y1 * h5;
}

// Value at h = 0 of the function c_0 h^p_0 + c_1 h^p_1 + c_2 h^p_2 (with
// p_0 = 0) through three samples, by Gaussian elimination.
double extrapolate_to_zero(const std::array<double, 3>& hs,
                           const std::array<double, 3>& ys,
                           const std::array<int, 3>& powers) {
  std::array<std::array<double, 4>, 3> a{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) a[i][j] = std::pow(hs[i], powers[j]);
    a[i][3] = ys[i];
  }
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 3; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] / a[col][col];
      for (std::size_t j = col; j < 4; ++j) a[r][j] -= factor * a[col][j];
    }
  }
  return a[0][3] / a[0][0];
}

constexpr std::array<double, 3> kLimitSteps = {1e-2, 1e-3, 1e-4};

// Tabulates log F on one side of 1, from |log x| = min_log_distance out to
// |log x_far| plus two margin nodes, with a node exactly on the anchor.
MeasureBranch tabulate(const OrdinaryMean& k, int side, double x_far,
                       double tol, const BuildOptions& opts) {
  const int n = std::max(opts.points_per_branch, 8);
  const double t_lo = std::log(opts.min_log_distance);
  const double t_hi = std::log(std::abs(std::log(x_far)));
  if (!(t_lo < t_hi)) throw DomainError("window too close to 1 to tabulate");
  const double dt = (t_hi - t_lo) / (n - 3);
  const auto anchor_index =
      static_cast<std::size_t>(std::llround((kAnchorT - t_lo) / dt));

  MeasureBranch b;
  b.side = side;
  b.dt = dt;
  b.t0 = kAnchorT - static_cast<double>(anchor_index) * dt;
  const auto count = static_cast<std::size_t>(n);
  b.log_F.resize(count);
  b.dlog_F.resize(count);
  b.d2log_F.resize(count);
  b.log_f.resize(count);
  b.log_w.resize(count);

  // d log F / dt = x'(t) / (x - K(1, x)) with x(t) = exp(side * e^t).
  auto integrand = [&k, side](double t) {
    const double u = std::exp(t);
    const double x = std::exp(side * u);
    return side * x * u / (x - k.section(x));
  };

  std::vector<double> gaps(count);
  std::vector<double> slopes(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = b.t_at(i);
    const double u = std::exp(t);
    const double x = std::exp(side * u);
    const double gap = x - k.section(x);
    if (!(side * gap > 0.0) || !std::isfinite(gap)) {
      throw NotStrictlyInternal("x - K(1, x) has the wrong sign at x = " +
                                std::to_string(x) + " for mean '" + k.name +
                                "'");
    }
    const double slope = k.section_slope(x);
    if (!(slope > 0.0) || !std::isfinite(slope)) {
      throw DomainError("section slope of mean '" + k.name +
                        "' is not positive at x = " + std::to_string(x));
    }
    const double dx = side * x * u;
    const double d2x = x * u * (u + side);
    gaps[i] = gap;
    slopes[i] = slope;
    b.dlog_F[i] = dx / gap;
    b.d2log_F[i] = (d2x * gap - dx * dx * (1.0 - slope)) / (gap * gap);
  }

  // x - K(1, x) carries an absolute rounding error of a few ulps of x, so
  // close to 1 the integrand is only known to ~eps x / |gap| relative and
  // the panel tolerance must not ask for more.
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::vector<double> cumulative(count, 0.0);
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const double x = b.x_at(i);
    const double noise = 8.0 * kEps * x / std::abs(gaps[i]);
    const double scale = std::abs(b.dlog_F[i]) * dt;
    const QuadratureOptions qopts{scale * std::max(tol, noise), tol, 1000};
    cumulative[i + 1] =
        cumulative[i] + quad(integrand, b.t_at(i), b.t_at(i + 1), qopts).value;
  }
  for (std::size_t i = 0; i < count; ++i) {
    b.log_F[i] = cumulative[i] - cumulative[anchor_index];
    const double log_gap = std::log(std::abs(gaps[i]));
    b.log_f[i] = b.log_F[i] - log_gap;
    b.log_w[i] = std::log(slopes[i]) + b.log_f[i] - log_gap;
  }
  return b;
}

}  // namespace

double MeasureBranch::x_at(std::size_t i) const {
  return std::exp(side * std::exp(t_at(i)));
}

double MeasureBranch::interpolate_log_F(double t) const {
  const std::size_t n = size();
  // Index coordinate measured from the anchor node so that the anchor is
  // hit exactly.
  const double anchor_index = std::round((kAnchorT - t0) / dt);
  const double s = anchor_index + (t - kAnchorT) / dt;
  if (s <= 0.0) return log_F[0] + dlog_F[0] * (t - t_at(0));
  if (s >= static_cast<double>(n - 1)) {
    return log_F[n - 1] + dlog_F[n - 1] * (t - t_at(n - 1));
  }
  const auto i = static_cast<std::size_t>(s);
  const double frac = s - static_cast<double>(i);
  return quintic_hermite(log_F[i], dlog_F[i], d2log_F[i], log_F[i + 1],
                         dlog_F[i + 1], d2log_F[i + 1], dt, frac);
}

std::shared_ptr<const ConstructedMeasure> ConstructedMeasure::build(
    const OrdinaryMean& k, double lo, double hi, double tol,
    const BuildOptions& opts) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidInterval("construction window requires finite lo < hi");
  }
  const double probe_lo = std::min(lo, 0.5);
  const double probe_hi = std::max(hi, 2.0);
  if (!(probe_lo > k.domain_lo) || !(probe_hi < k.domain_hi)) {
    throw DomainError("construction window exceeds the domain of mean '" +
                      k.name + "'");
  }
  if (!(probe_lo > 0.0)) {
    throw DomainError("construction requires a window inside (0, inf)");
  }
  check_mean(k, probe_lo, probe_hi);

  std::shared_ptr<ConstructedMeasure> m(new ConstructedMeasure(k, lo, hi));
  if (hi > 1.0) m->right_ = tabulate(k, +1, probe_hi, tol, opts);
  if (lo < 1.0) m->left_ = tabulate(k, -1, probe_lo, tol, opts);

  if (m->right_ && m->left_) {
    const double wr = m->one_sided_limit(+1);
    const double wl = m->one_sided_limit(-1);
    const bool limits_ok = std::isfinite(wr) && std::isfinite(wl) &&
                           wr > 0.0 && wl > 0.0;
    const double scale = limits_ok ? m->density_limit_scale() : 0.0;
    if (opts.calibration == Calibration::density_limit &&
        std::isfinite(scale) && scale > 0.0) {
      m->left_scale_ = scale;
      m->calibration_used_ = Calibration::density_limit;
    } else {
      m->left_scale_ = m->calibrate_by_probe_pair();
      m->calibration_used_ = Calibration::probe_pair;
    }
    m->limit_right_ = wr;
    m->limit_left_ = m->left_scale_ * wl;
  } else if (m->right_) {
    m->limit_right_ = m->one_sided_limit(+1);
    m->limit_left_ = m->limit_right_;
  } else {
    m->limit_left_ = m->one_sided_limit(-1);
    m->limit_right_ = m->limit_left_;
  }
  return m;
}

double ConstructedMeasure::raw_F(int side, double x) const {
  const auto& branch = side > 0 ? right_ : left_;
  if (!branch) {
    throw DomainError("constructed measure has no tabulation at x = " +
                      std::to_string(x));
  }
  const double t = std::log(side * std::log(x));
  return std::exp(branch->interpolate_log_F(t));
}

double ConstructedMeasure::raw_w(int side, double x) const {
  const double g = gap(x);
  return mean_.section_slope(x) * raw_F(side, x) / (g * g);
}

double ConstructedMeasure::one_sided_limit(int side) const {
  // Polynomial extrapolation in h of w(1 + side h) to h = 0.
  std::array<double, 3> ws{};
  for (std::size_t i = 0; i < kLimitSteps.size(); ++i) {
    ws[i] = raw_w(side, 1.0 + side * kLimitSteps[i]);
  }
  return extrapolate_to_zero(kLimitSteps, ws, {0, 1, 2});
}

double ConstructedMeasure::density_limit_scale() const {
  // With the right scale s, log w(1 + h) and log s w_left(1 - h) are one
  // analytic function, so their difference is log s plus odd powers of h
  // only. Extrapolating in {1, h, h^3} leaves an O(h^5) error where the
  // separate one-sided limits would leave O(h^3).
  std::array<double, 3> ds{};
  for (std::size_t i = 0; i < kLimitSteps.size(); ++i) {
    const double h = kLimitSteps[i];
    ds[i] = std::log(raw_w(+1, 1.0 + h)) - std::log(raw_w(-1, 1.0 - h));
  }
  return std::exp(extrapolate_to_zero(kLimitSteps, ds, {0, 1, 3}));
}

double ConstructedMeasure::calibrate_by_probe_pair() const {
  const double a = left_anchor();
  const double b = x0();
  const double target = mean_(a, b);
  const double Fa = raw_F(-1, a);
  const double fa = Fa / gap(a);
  const double Fb = raw_F(+1, b);
  const double fb = Fb / gap(b);
  auto residual = [&](double log_scale) {
    const double s = std::exp(log_scale);
    return (b * fb - a * s * fa - (Fb - s * Fa)) / (fb - s * fa) - target;
  };
  const RootResult r = find_root(residual, -40.0, 40.0, 1e-15);
  if (!r.converged) {
    throw DomainError("left branch calibration did not converge");
  }
  return std::exp(r.x);
}

double ConstructedMeasure::F(double x) const {
  if (x == 1.0) return 0.0;
  return x > 1.0 ? raw_F(+1, x) : left_scale_ * raw_F(-1, x);
}

double ConstructedMeasure::f(double x) const {
  if (x == 1.0) return 0.0;
  return F(x) / gap(x);
}

double ConstructedMeasure::w(double x) const {
  if (x == 1.0) return limit_right_;
  return x > 1.0 ? raw_w(+1, x) : left_scale_ * raw_w(-1, x);
}

DensityShape ConstructedMeasure::shape() const {
  // Node values with their relative noise floor: near 1 the density is
  // only known to about eps / |log x|, so comparisons there are loose.
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::vector<std::pair<double, double>> ws;
  auto push = [&](const MeasureBranch& b, std::size_t i, double scale) {
    const double x = b.x_at(i);
    if (x < lo_ || x > hi_) return;
    const double noise = 1e-12 + 64.0 * kEps * std::exp(-b.t_at(i));
    ws.emplace_back(scale * std::exp(b.log_w[i]), noise);
  };
  if (left_) {
    for (std::size_t i = left_->size(); i-- > 0;) push(*left_, i, left_scale_);
  }
  if (right_) {
    for (std::size_t i = 0; i < right_->size(); ++i) push(*right_, i, 1.0);
  }
  bool nonincreasing = true;
  bool nondecreasing = true;
  for (std::size_t i = 0; i + 1 < ws.size(); ++i) {
    const auto [w0, n0] = ws[i];
    const auto [w1, n1] = ws[i + 1];
    const double slack = std::max(n0, n1) * std::max(w0, w1);
    if (w1 > w0 + slack) nonincreasing = false;
    if (w1 < w0 - slack) nondecreasing = false;
  }
  if (nonincreasing && nondecreasing) return DensityShape::constant;
  if (nonincreasing) return DensityShape::decreasing;
  if (nondecreasing) return DensityShape::increasing;
  return DensityShape::none;
}

MeasureSpec ConstructedMeasure::spec() const {
  auto self = shared_from_this();
  MeasureSpec s;
  s.name = "built:" + mean_.name;
  s.domain = {lo_, hi_, true, true};
  s.density = [self](double x) { return self->w(x); };
  s.cdf = [self](double x) { return self->f(x); };
  s.antiderivative = [self](double x) { return self->F(x); };
  s.density_shape = shape();
  return s;
}

MeasureSpec build(const OrdinaryMean& k, double lo, double hi, double tol,
                  const BuildOptions& opts) {
  return ConstructedMeasure::build(k, lo, hi, tol, opts)->spec();
}

double reconstruct(const MeasureSpec& spec, double a, double b) {
  if (!(a < b)) throw InvalidInterval("reconstruct requires a < b");
  require_in_domain(spec, IntervalSet::single(a, b));
  if (!spec.cdf || !spec.antiderivative) {
    throw DomainError("reconstruct needs f and F for measure '" + spec.name +
                      "'");
  }
  const auto& f = *spec.cdf;
  const auto& F = *spec.antiderivative;
  const double fa = f(a);
  const double fb = f(b);
  return (b * fb - a * fa - (F(b) - F(a))) / (fb - fa);
}

double from_section(const std::function<double(double)>& g,
                    const ConstructedMeasure& m, double a, double b) {
  if (!(a < b)) throw InvalidInterval("from_section requires a < b");
  if (a < m.window_lo() || b > m.window_hi()) {
    throw DomainError("from_section arguments leave the construction window");
  }
  const double fa = m.f(a);
  const double fb = m.f(b);
  return (fb * g(b) - fa * g(a)) / (fb - fa);
}

double mean_from_fF(const std::function<double(double)>& f,
                    const std::function<double(double)>& F, double a,
                    double b) {
  if (!(a < b)) throw InvalidInterval("mean_from_fF requires a < b");
  const double fa = f(a);
  const double fb = f(b);
  if (!(fb > fa)) throw NotIncreasing("f(b) <= f(a)");
  return (b * fb - a * fa - (F(b) - F(a))) / (fb - fa);
}

UniquenessResult uniqueness_check(const MeasureSpec& a, const MeasureSpec& b,
                                  std::span<const IntervalSet> probes) {
  if (probes.empty()) throw EmptySet("uniqueness_check needs probes");
  UniquenessResult r;
  std::vector<double> ratios;
  ratios.reserve(probes.size());
  for (const auto& p : probes) {
    const MeanReport ma = mean(a, p);
    const MeanReport mb = mean(b, p);
    if (std::abs(ma.value - mb.value) >
        1e-9 * std::max(1.0, std::abs(ma.value))) {
      r.proportional = false;
      r.witness = p;
      r.mean_a = ma.value;
      r.mean_b = mb.value;
      return r;
    }
    ratios.push_back(mb.mass / ma.mass);
  }
  double sum = 0.0;
  for (double q : ratios) sum += q;
  r.c = sum / static_cast<double>(ratios.size());
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  r.spread = (*hi - *lo) / std::abs(r.c);
  if (r.spread <= 1e-6) {
    r.proportional = true;
    return r;
  }
  // Mass ratio varies although the means agree: report the probe that
  // strays furthest from the average.
  std::size_t worst = 0;
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    if (std::abs(ratios[i] - r.c) > std::abs(ratios[worst] - r.c)) worst = i;
  }
  r.witness = probes[worst];
  r.mean_a = mean(a, probes[worst]).value;
  r.mean_b = mean(b, probes[worst]).value;
  return r;
}

}  // namespace measmean
