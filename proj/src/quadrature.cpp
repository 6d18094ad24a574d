#include "measmean/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "measmean/errors.hpp"

namespace measmean {

namespace {

// Kronrod abscissae on [0, 1]; odd indices are the embedded Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

double eval(const std::function<double(double)>& fn, double x) {
  const double y = fn(x);
  if (!std::isfinite(y)) {
    throw DomainError("integrand is not finite at x = " + std::to_string(x));
  }
  return y;
}

Panel gk15(const std::function<double(double)>& fn, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = eval(fn, center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = eval(fn, center - dx) + eval(fn, center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult quad(const std::function<double(double)>& fn, double a,
                      double b, const QuadratureOptions& opts) {
  if (!(a < b)) throw InvalidInterval("quad requires a < b");

  std::priority_queue<Panel> heap;
  Panel first = gk15(fn, a, b);
  heap.push(first);
  double value = first.value;
  double error = first.error;
  std::size_t evaluations = 15;
  std::size_t panels = 1;

  auto converged = [&] {
    return error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
  };

  while (!converged()) {
    Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    // The panel cannot be split further in floating point.
    if (!(worst.a < mid && mid < worst.b)) break;
    if (panels >= opts.max_panels) {
      throw QuadratureError("quadrature panel budget exhausted", value, error);
    }
    heap.pop();
    Panel left = gk15(fn, worst.a, mid);
    Panel right = gk15(fn, mid, worst.b);
    evaluations += 30;
    ++panels;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to shed the drift of the running totals.
  value = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  if (!converged()) {
    throw QuadratureError("quadrature did not reach tolerance", value, error);
  }
  return {value, error, evaluations};
}

}  // namespace measmean
