#include "measmean/root_find.hpp"

#include <cmath>
#include <utility>

#include "measmean/errors.hpp"

namespace measmean {

RootResult find_root(const std::function<double(double)>& fn, double lo,
                     double hi, double xtol, int max_iter) {
  if (!(lo < hi)) throw DomainError("root bracket requires lo < hi");
  double flo = fn(lo);
  double fhi = fn(hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi)) {
    throw DomainError("root bracket endpoints are not finite");
  }
  if (flo == 0.0) return {lo, 0.0, 0, true};
  if (fhi == 0.0) return {hi, 0.0, 0, true};
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw DomainError("root is not bracketed");
  }

  RootResult r;
  int side = 0;  // which endpoint was retained last time
  for (r.iterations = 1; r.iterations <= max_iter; ++r.iterations) {
    const double width = hi - lo;
    double x = (lo * fhi - hi * flo) / (fhi - flo);
    // Keep the iterate well inside the bracket; otherwise bisect.
    if (!(x > lo + 0.01 * width && x < hi - 0.01 * width)) {
      x = lo + 0.5 * width;
    }
    const double fx = fn(x);
    if (!std::isfinite(fx)) throw DomainError("root function not finite");
    r.x = x;
    r.fx = fx;
    if (fx == 0.0) {
      r.converged = true;
      return r;
    }
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
      if (side == -1) fhi *= 0.5;
      side = -1;
    } else {
      hi = x;
      fhi = fx;
      if (side == 1) flo *= 0.5;
      side = 1;
    }
    if (hi - lo <= xtol * std::max(1.0, std::abs(x))) {
      r.converged = true;
      r.x = std::abs(flo) < std::abs(fhi) ? lo : hi;
      r.fx = fn(r.x);
      return r;
    }
  }
  return r;
}

}  // namespace measmean
