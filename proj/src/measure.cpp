#include "measmean/measure.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "measmean/errors.hpp"

namespace measmean {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string describe(const Interval& iv) {
  std::ostringstream os;
  os.precision(17);
  os << "[" << iv.lo << ", " << iv.hi << "]";
  return os.str();
}

}  // namespace

std::string_view to_string(DensityShape shape) {
  switch (shape) {
    case DensityShape::increasing: return "increasing";
    case DensityShape::decreasing: return "decreasing";
    case DensityShape::constant: return "constant";
    case DensityShape::none: return "none";
  }
  return "none";
}

std::string_view to_string(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::certified: return "certified";
    case CertificateStatus::refuted: return "refuted";
    case CertificateStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

bool Domain::contains(double x) const {
  const bool above = lo_closed ? x >= lo : x > lo;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

bool Domain::contains(const IntervalSet& h) const {
  if (h.empty()) return true;
  return contains(infimum(h)) && contains(supremum(h));
}

void require_in_domain(const MeasureSpec& spec, const IntervalSet& h) {
  if (spec.domain.contains(h)) return;
  const Interval hull{infimum(h), supremum(h)};
  throw DomainError("set " + describe(hull) + " exceeds the domain of measure '" +
                    spec.name + "'");
}

Moments moments(const MeasureSpec& spec, const IntervalSet& h,
                const QuadratureOptions& opts) {
  require_in_domain(spec, h);
  Moments m;
  for (const auto& iv : h) {
    const double a = iv.lo;
    const double b = iv.hi;

    if (spec.mass_increment) {
      const double d = (*spec.mass_increment)(a, b);
      m.mass += d;
      m.mass_err += 4 * kEps * std::abs(d);
    } else if (spec.cdf) {
      const double fa = (*spec.cdf)(a);
      const double fb = (*spec.cdf)(b);
      m.mass += fb - fa;
      m.mass_err += 4 * kEps * (std::abs(fa) + std::abs(fb));
    } else {
      const auto q = quad(spec.density, a, b, opts);
      m.mass += q.value;
      m.mass_err += q.error_estimate;
    }

    if (spec.moment_increment) {
      const double d = (*spec.moment_increment)(a, b);
      m.moment += d;
      m.moment_err += 4 * kEps * std::abs(d);
    } else if (spec.cdf && spec.antiderivative) {
      const double fa = (*spec.cdf)(a);
      const double fb = (*spec.cdf)(b);
      const double Fa = (*spec.antiderivative)(a);
      const double Fb = (*spec.antiderivative)(b);
      m.moment += b * fb - a * fa - (Fb - Fa);
      m.moment_err += 8 * kEps *
                      (std::abs(b * fb) + std::abs(a * fa) + std::abs(Fa) +
                       std::abs(Fb));
    } else {
      const auto& w = spec.density;
      const auto q = quad([&w](double x) { return x * w(x); }, a, b, opts);
      m.moment += q.value;
      m.moment_err += q.error_estimate;
    }
  }
  return m;
}

double mu(const MeasureSpec& spec, const IntervalSet& h) {
  return moments(spec, h).mass;
}

double first_moment(const MeasureSpec& spec, const IntervalSet& h) {
  return moments(spec, h).moment;
}

MeasureSpec scaled(const MeasureSpec& spec, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("measure scale must be positive and finite");
  }
  MeasureSpec out = spec;
  out.name = spec.name + "*" + std::to_string(c);
  out.density = [w = spec.density, c](double x) { return c * w(x); };
  if (spec.cdf) {
    out.cdf = [f = *spec.cdf, c](double x) { return c * f(x); };
  }
  if (spec.antiderivative) {
    out.antiderivative = [F = *spec.antiderivative, c](double x) {
      return c * F(x);
    };
  }
  if (spec.mass_increment) {
    out.mass_increment = [g = *spec.mass_increment, c](double a, double b) {
      return c * g(a, b);
    };
  }
  if (spec.moment_increment) {
    out.moment_increment = [g = *spec.moment_increment, c](double a,
                                                           double b) {
      return c * g(a, b);
    };
  }
  return out;
}

std::vector<double> probe_grid(double lo, double hi, int n) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi) || n < 2) {
    throw DomainError("probe grid needs a finite interval and n >= 2");
  }
  std::vector<double> xs(static_cast<std::size_t>(n));
  const bool geometric = lo > 0.0;
  const double l0 = geometric ? std::log(lo) : lo;
  const double l1 = geometric ? std::log(hi) : hi;
  for (int i = 0; i < n; ++i) {
    const double t = l0 + (l1 - l0) * (i + 0.5) / n;
    xs[static_cast<std::size_t>(i)] = geometric ? std::exp(t) : t;
  }
  return xs;
}

void validate(const MeasureSpec& spec, double lo, double hi, int n_probe,
              double rel_tol) {
  for (double x : probe_grid(lo, hi, n_probe)) {
    if (!spec.domain.contains(x)) {
      throw DomainError("validation probe outside the domain of '" +
                        spec.name + "'");
    }
    const double w = spec.density(x);
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw DomainError("density of '" + spec.name +
                        "' is not strictly positive at x = " +
                        std::to_string(x));
    }
    const double h = std::min(1e-5 * std::max(1.0, std::abs(x)),
                              0.5 * std::min(x - lo, hi - x));
    if (spec.cdf) {
      const auto& f = *spec.cdf;
      const double df = (f(x + h) - f(x - h)) / (2 * h);
      if (std::abs(df - w) > rel_tol * w) {
        throw DomainError("cdf derivative disagrees with density of '" +
                          spec.name + "' at x = " + std::to_string(x));
      }
      if (spec.antiderivative) {
        const auto& F = *spec.antiderivative;
        const double dF = (F(x + h) - F(x - h)) / (2 * h);
        const double scale = std::abs(f(x)) + std::abs(x) * w;
        if (std::abs(dF - f(x)) > rel_tol * scale) {
          throw DomainError("antiderivative disagrees with cdf of '" +
                            spec.name + "' at x = " + std::to_string(x));
        }
      }
    }
  }
}

RatioCertificate density_ratio_increasing(const MeasureSpec& numer,
                                          const MeasureSpec& denom, double lo,
                                          double hi, int n_probe) {
  const auto xs = probe_grid(lo, hi, n_probe);
  std::vector<double> ratio;
  ratio.reserve(xs.size());
  for (double x : xs) {
    if (!numer.domain.contains(x) || !denom.domain.contains(x)) {
      throw DomainError("ratio probe outside a measure domain");
    }
    const double wn = numer.density(x);
    const double wd = denom.density(x);
    if (!(wn > 0.0) || !(wd > 0.0)) {
      throw DomainError("non-positive density sample at x = " +
                        std::to_string(x));
    }
    ratio.push_back(wn / wd);
  }

  RatioCertificate cert;
  for (std::size_t i = 0; i + 1 < ratio.size(); ++i) {
    if (ratio[i + 1] < ratio[i] * (1.0 - 1e-12)) {
      cert.status = CertificateStatus::refuted;
      cert.x1 = xs[i];
      cert.x2 = xs[i + 1];
      cert.r1 = ratio[i];
      cert.r2 = ratio[i + 1];
      return cert;
    }
  }
  const bool declared = numer.density_shape != DensityShape::none &&
                        denom.density_shape != DensityShape::none;
  cert.status = declared ? CertificateStatus::certified
                         : CertificateStatus::inconclusive;
  return cert;
}

}  // namespace measmean
