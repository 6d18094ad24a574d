#include "measmean/ordinary_mean.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "measmean/errors.hpp"
#include "measmean/measure.hpp"

namespace measmean {

double OrdinaryMean::section_slope(double b) const {
  if (section_deriv) return (*section_deriv)(b);
  const double h = 1e-6 * std::max(1.0, std::abs(b));
  return (section(b + h) - section(b - h)) / (2 * h);
}

namespace {

OrdinaryMean arithmetic_mean() {
  OrdinaryMean k;
  k.name = "arithmetic";
  k.eval = [](double a, double b) { return 0.5 * (a + b); };
  k.section_deriv = [](double) { return 0.5; };
  k.domain_lo = -std::numeric_limits<double>::infinity();
  return k;
}

OrdinaryMean geometric_mean() {
  OrdinaryMean k;
  k.name = "geometric";
  k.eval = [](double a, double b) { return std::sqrt(a) * std::sqrt(b); };
  k.section_deriv = [](double b) { return 0.5 / std::sqrt(b); };
  return k;
}

OrdinaryMean harmonic_mean() {
  OrdinaryMean k;
  k.name = "harmonic";
  k.eval = [](double a, double b) { return 2.0 * a * b / (a + b); };
  k.section_deriv = [](double b) { return 2.0 / ((1.0 + b) * (1.0 + b)); };
  return k;
}

OrdinaryMean logarithmic_mean() {
  OrdinaryMean k;
  k.name = "logarithmic";
  k.eval = [](double a, double b) {
    if (a == b) return a;
    return (b - a) / std::log1p((b - a) / a);
  };
  // d/dx (x - 1)/log x = (u + expm1(-u)) / u^2 with u = log x.
  k.section_deriv = [](double b) {
    const double u = std::log(b);
    if (std::abs(u) < 1e-3) {
      return 0.5 + u * (-1.0 / 6 + u * (1.0 / 24 - u / 120));
    }
    return (u + std::expm1(-u)) / (u * u);
  };
  return k;
}

}  // namespace

OrdinaryMean power_mean(double p) {
  if (!std::isfinite(p)) throw UnknownMean("power mean exponent must be finite");
  if (p == 0.0) {
    OrdinaryMean k = geometric_mean();
    k.name = "power:0";
    return k;
  }
  OrdinaryMean k;
  k.name = "power:" + std::to_string(p);
  k.eval = [p](double a, double b) {
    return std::pow(0.5 * (std::pow(a, p) + std::pow(b, p)), 1.0 / p);
  };
  k.section_deriv = [p](double b) {
    const double s = 0.5 * (1.0 + std::pow(b, p));
    return std::pow(s, 1.0 / p - 1.0) * 0.5 * std::pow(b, p - 1.0);
  };
  return k;
}

OrdinaryMean ordinary_mean(std::string_view name) {
  if (name == "arithmetic") return arithmetic_mean();
  if (name == "geometric") return geometric_mean();
  if (name == "harmonic") return harmonic_mean();
  if (name == "logarithmic") return logarithmic_mean();
  constexpr std::string_view prefix = "power:";
  if (name.starts_with(prefix)) {
    const std::string_view arg = name.substr(prefix.size());
    double p = 0.0;
    const auto [ptr, ec] =
        std::from_chars(arg.data(), arg.data() + arg.size(), p);
    if (ec == std::errc() && ptr == arg.data() + arg.size() && !arg.empty()) {
      return power_mean(p);
    }
  }
  throw UnknownMean("unknown mean '" + std::string(name) + "'");
}

void check_mean(const OrdinaryMean& k, double lo, double hi, int n_probe) {
  const auto xs = probe_grid(lo, hi, n_probe);
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    // Far pairs and near pairs.
    for (std::size_t j : {n - 1 - i, i + 1}) {
      if (j >= n || j == i) continue;
      const double a = std::min(xs[i], xs[j]);
      const double b = std::max(xs[i], xs[j]);
      const double kab = k(a, b);
      const double kba = k(b, a);
      if (std::abs(kab - kba) > 1e-12 * std::abs(kab)) {
        throw NotSymmetric("mean '" + k.name + "' is not symmetric at (" +
                           std::to_string(a) + ", " + std::to_string(b) + ")");
      }
      if (!(a < kab && kab < b)) {
        throw NotStrictlyInternal("mean '" + k.name +
                                  "' is not strictly internal at (" +
                                  std::to_string(a) + ", " +
                                  std::to_string(b) + ")");
      }
    }
  }
}

}  // namespace measmean
