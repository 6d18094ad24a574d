#include "measmean/catalog.hpp"

#include <cmath>
#include <limits>

#include "measmean/errors.hpp"

namespace measmean {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// 1 / e^2, the normalization that pins the geometric measure at f(1) = 0.
const double kInvE2 = std::exp(-2.0);

MeasureSpec lebesgue_measure() {
  MeasureSpec s;
  s.name = "lebesgue";
  s.domain = {-kInf, kInf};
  s.density = [](double) { return 1.0; };
  s.cdf = [](double x) { return x; };
  s.antiderivative = [](double x) { return 0.5 * x * x; };
  s.density_shape = DensityShape::constant;
  s.mass_increment = [](double a, double b) { return b - a; };
  s.moment_increment = [](double a, double b) {
    return 0.5 * (b - a) * (b + a);
  };
  return s;
}

// f(x) = (1 - 1/sqrt(x)) / e^2, generating the geometric mean.
MeasureSpec geometric_measure() {
  MeasureSpec s;
  s.name = "geometric";
  s.domain = {0.0, kInf};
  s.density = [](double x) { return 0.5 * kInvE2 / (x * std::sqrt(x)); };
  s.cdf = [](double x) { return kInvE2 * (1.0 - 1.0 / std::sqrt(x)); };
  s.antiderivative = [](double x) {
    const double r = std::sqrt(x) - 1.0;
    return kInvE2 * r * r;
  };
  s.density_shape = DensityShape::decreasing;
  // 1/sqrt(a) - 1/sqrt(b) = (b - a) / (sqrt(ab) (sqrt(a) + sqrt(b)))
  s.mass_increment = [](double a, double b) {
    const double ra = std::sqrt(a);
    const double rb = std::sqrt(b);
    return kInvE2 * (b - a) / (ra * rb * (ra + rb));
  };
  // sqrt(b) - sqrt(a) = (b - a) / (sqrt(a) + sqrt(b))
  s.moment_increment = [](double a, double b) {
    return kInvE2 * (b - a) / (std::sqrt(a) + std::sqrt(b));
  };
  return s;
}

// f(x) = 1 - 1/x^2, generating the harmonic mean.
MeasureSpec harmonic_measure() {
  MeasureSpec s;
  s.name = "harmonic";
  s.domain = {0.0, kInf};
  s.density = [](double x) { return 2.0 / (x * x * x); };
  s.cdf = [](double x) { return 1.0 - 1.0 / (x * x); };
  s.antiderivative = [](double x) { return x - 2.0 + 1.0 / x; };
  s.density_shape = DensityShape::decreasing;
  s.mass_increment = [](double a, double b) {
    return (b - a) * (b + a) / (a * a * b * b);
  };
  s.moment_increment = [](double a, double b) {
    return 2.0 * (b - a) / (a * b);
  };
  return s;
}

// f(x) = log x, generating the logarithmic mean.
MeasureSpec logarithmic_measure() {
  MeasureSpec s;
  s.name = "logarithmic";
  s.domain = {0.0, kInf};
  s.density = [](double x) { return 1.0 / x; };
  s.cdf = [](double x) { return std::log(x); };
  s.antiderivative = [](double x) { return x * std::log(x) - x + 1.0; };
  s.density_shape = DensityShape::decreasing;
  s.mass_increment = [](double a, double b) {
    return std::log1p((b - a) / a);
  };
  s.moment_increment = [](double a, double b) { return b - a; };
  return s;
}

// f(x) = x^2.
MeasureSpec square_measure() {
  MeasureSpec s;
  s.name = "square";
  s.domain = {0.0, kInf};
  s.density = [](double x) { return 2.0 * x; };
  s.cdf = [](double x) { return x * x; };
  s.antiderivative = [](double x) { return x * x * x / 3.0; };
  s.density_shape = DensityShape::increasing;
  s.mass_increment = [](double a, double b) { return (b - a) * (b + a); };
  s.moment_increment = [](double a, double b) {
    return (2.0 / 3.0) * (b - a) * (a * a + a * b + b * b);
  };
  return s;
}

// f(x) = e^x.
MeasureSpec exponential_measure() {
  MeasureSpec s;
  s.name = "exponential";
  s.domain = {-kInf, kInf};
  s.density = [](double x) { return std::exp(x); };
  s.cdf = [](double x) { return std::exp(x); };
  s.antiderivative = [](double x) { return std::exp(x); };
  s.density_shape = DensityShape::increasing;
  s.mass_increment = [](double a, double b) {
    return std::exp(a) * std::expm1(b - a);
  };
  // [(x - 1) e^x]_a^b = e^a ((b - 1) expm1(b - a) + (b - a))
  s.moment_increment = [](double a, double b) {
    return std::exp(a) * ((b - 1.0) * std::expm1(b - a) + (b - a));
  };
  return s;
}

}  // namespace

MeasureSpec catalog(std::string_view name) {
  if (name == "lebesgue") return lebesgue_measure();
  if (name == "geometric") return geometric_measure();
  if (name == "harmonic") return harmonic_measure();
  if (name == "logarithmic") return logarithmic_measure();
  if (name == "square") return square_measure();
  if (name == "exponential") return exponential_measure();
  throw UnknownMeasure("unknown measure '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"lebesgue", "geometric", "harmonic", "logarithmic", "square",
          "exponential"};
}

}  // namespace measmean
