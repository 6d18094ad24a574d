#include "measmean/gen_mean.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "measmean/errors.hpp"
#include "measmean/quadrature.hpp"
#include "measmean/random_sets.hpp"

namespace measmean {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Slack for comparing two computed means.
double compare_tol(double a, double b) {
  return 1e-12 * (1.0 + std::max(std::abs(a), std::abs(b)));
}

bool leq(double a, double b) { return a <= b + compare_tol(a, b); }
bool strictly_less(double a, double b) { return a < b - compare_tol(a, b); }

std::string format_set(const IntervalSet& h) {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& iv : h) {
    if (!first) os << " U ";
    os << "[" << iv.lo << ", " << iv.hi << "]";
    first = false;
  }
  return first ? std::string("{}") : os.str();
}

}  // namespace

MeanReport mean(const MeasureSpec& spec, const IntervalSet& h) {
  if (h.empty()) throw EmptySet("mean of empty set");
  const Moments m = moments(spec, h);
  if (!(m.mass > 0.0)) {
    throw DomainError("set has zero mass under measure '" + spec.name + "'");
  }
  MeanReport r;
  r.mass = m.mass;
  r.moment = m.moment;
  r.value = m.moment / m.mass;
  r.err = (m.moment_err + std::abs(r.value) * m.mass_err) / m.mass +
          2 * kEps * std::abs(r.value);
  return r;
}

double ordinary(const MeasureSpec& spec, double a, double b) {
  if (!(a < b)) throw InvalidInterval("ordinary mean requires a < b");
  return mean(spec, IntervalSet::single(a, b)).value;
}

double avg(const IntervalSet& h) {
  if (h.empty()) throw EmptySet("Avg of empty set");
  double moment = 0.0;
  double length = 0.0;
  for (const auto& iv : h) {
    moment += 0.5 * (iv.hi - iv.lo) * (iv.hi + iv.lo);
    length += iv.hi - iv.lo;
  }
  return moment / length;
}

double pseudo_metric(const MeasureSpec& spec, const IntervalSet& a,
                     const IntervalSet& b) {
  require_in_domain(spec, a);
  require_in_domain(spec, b);
  return mu(spec, symdiff(a, b));
}

double decompose_check(const MeasureSpec& spec,
                       std::span<const IntervalSet> parts) {
  if (parts.empty()) throw EmptySet("decomposition needs at least one part");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (!disjoint(parts[i], parts[j])) {
        throw NotDisjoint("parts " + std::to_string(i) + " and " +
                          std::to_string(j) + " overlap");
      }
    }
  }
  IntervalSet whole;
  double weighted = 0.0;
  double total = 0.0;
  for (const auto& p : parts) {
    const MeanReport r = mean(spec, p);
    weighted += r.mass * r.value;
    total += r.mass;
    whole = set_union(whole, p);
  }
  return std::abs(mean(spec, whole).value - weighted / total);
}

std::vector<double> cantor_probe(const MeasureSpec& spec,
                                 std::span<const IntervalSet> chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!contains(chain[i], chain[i + 1])) {
      throw NotNested("chain element " + std::to_string(i + 1) +
                      " is not contained in its predecessor");
    }
  }
  if (chain.empty()) return {};
  const double limit = mean(spec, chain.back()).value;
  std::vector<double> gaps;
  gaps.reserve(chain.size());
  for (const auto& h : chain) {
    gaps.push_back(std::abs(mean(spec, h).value - limit));
  }
  return gaps;
}

MonotonicityReport monotonicity_probe(const MeasureSpec& spec,
                                      const IntervalSet& a,
                                      const IntervalSet& b,
                                      const IntervalSet& c) {
  if (!disjoint(a, b)) throw NotDisjoint("A and B overlap");
  if (!disjoint(b, c)) throw NotDisjoint("B and C overlap");

  MonotonicityReport r;
  r.mean_a = mean(spec, a).value;
  r.mean_b = mean(spec, b).value;
  r.mean_ab = mean(spec, set_union(a, b)).value;
  r.mean_ac = mean(spec, set_union(a, c)).value;
  r.mean_abc = mean(spec, set_union(set_union(a, b), c)).value;
  std::ostringstream why;
  why.precision(17);

  // Disjoint-monotone: the union mean lies between the two part means,
  // strictly when the part means differ.
  {
    const double lo = std::min(r.mean_a, r.mean_b);
    const double hi = std::max(r.mean_a, r.mean_b);
    bool ok = leq(lo, r.mean_ab) && leq(r.mean_ab, hi);
    if (strictly_less(lo, hi)) ok = ok && lo < r.mean_ab && r.mean_ab < hi;
    if (!ok) {
      r.disjoint_monotone = false;
      why << "disjoint-monotone: M(A)=" << r.mean_a << " M(B)=" << r.mean_b
          << " M(AuB)=" << r.mean_ab << "; ";
    }
  }

  // Union-monotone, upward and downward.
  {
    bool ok = true;
    if (leq(r.mean_a, r.mean_ab) && leq(r.mean_a, r.mean_ac)) {
      ok = ok && leq(r.mean_a, r.mean_abc);
      if (strictly_less(r.mean_a, r.mean_ab) ||
          strictly_less(r.mean_a, r.mean_ac)) {
        ok = ok && r.mean_a < r.mean_abc;
      }
    }
    if (leq(r.mean_ab, r.mean_a) && leq(r.mean_ac, r.mean_a)) {
      ok = ok && leq(r.mean_abc, r.mean_a);
      if (strictly_less(r.mean_ab, r.mean_a) ||
          strictly_less(r.mean_ac, r.mean_a)) {
        ok = ok && r.mean_abc < r.mean_a;
      }
    }
    if (!ok) {
      r.union_monotone = false;
      why << "union-monotone: M(A)=" << r.mean_a << " M(AuB)=" << r.mean_ab
          << " M(AuC)=" << r.mean_ac << " M(AuBuC)=" << r.mean_abc << "; ";
    }
  }
  r.detail = why.str();
  return r;
}

LeqCertificate certify_leq(const MeasureSpec& mu_spec,
                           const MeasureSpec& nu_spec, double lo, double hi,
                           int n_probe, int n_random, std::uint64_t seed) {
  if (!(lo < hi)) throw DomainError("window requires lo < hi");
  for (const MeasureSpec* s : {&mu_spec, &nu_spec}) {
    if (!s->domain.contains(lo) || !s->domain.contains(hi)) {
      throw DomainError("window exceeds the domain of measure '" + s->name +
                        "'");
    }
  }

  LeqCertificate cert;
  Rng rng(seed);
  auto violates = [](double m_mu, double m_nu) {
    return m_mu - m_nu > 1e-9 * std::max(1.0, std::abs(m_nu));
  };
  auto refute = [&](const IntervalSet& h, double m_mu, double m_nu,
                    std::string reason) {
    cert.status = CertificateStatus::refuted;
    cert.witness = h;
    cert.mean_mu = m_mu;
    cert.mean_nu = m_nu;
    cert.reason = std::move(reason) + " on " + format_set(h);
  };

  for (int i = 0; i < n_probe; ++i) {
    const IntervalSet j = random_interval(rng, lo, hi);
    const double m_mu = mean(mu_spec, j).value;
    const double m_nu = mean(nu_spec, j).value;
    ++cert.intervals_checked;
    if (violates(m_mu, m_nu)) {
      refute(j, m_mu, m_nu, "interval-wise inequality fails");
      return cert;
    }
  }

  cert.ratio = density_ratio_increasing(nu_spec, mu_spec, lo, hi);

  for (int i = 0; i < n_random; ++i) {
    const IntervalSet h = random_union(rng, lo, hi, 1, 5);
    const double m_mu = mean(mu_spec, h).value;
    const double m_nu = mean(nu_spec, h).value;
    ++cert.unions_checked;
    if (violates(m_mu, m_nu)) {
      refute(h, m_mu, m_nu, "inequality fails");
      return cert;
    }
  }

  switch (cert.ratio.status) {
    case CertificateStatus::certified:
      cert.status = CertificateStatus::certified;
      cert.reason =
          "interval-wise inequality holds and the density ratio increases";
      break;
    case CertificateStatus::refuted:
      cert.status = CertificateStatus::inconclusive;
      cert.reason = "density ratio decreases on the probe grid; no "
                    "counterexample found";
      break;
    case CertificateStatus::inconclusive:
      cert.status = CertificateStatus::inconclusive;
      cert.reason = "density shapes undeclared; no counterexample found";
      break;
  }
  return cert;
}

double exp_avg_log(const IntervalSet& h) {
  if (h.empty()) throw EmptySet("exp_avg_log of empty set");
  if (!(infimum(h) > 0.0)) {
    throw DomainError("exp_avg_log requires a set of positive numbers");
  }
  std::vector<Interval> logs;
  logs.reserve(h.size());
  for (const auto& iv : h) logs.push_back({std::log(iv.lo), std::log(iv.hi)});
  const IntervalSet mapped = IntervalSet::normalize(std::move(logs));
  if (mapped.empty()) {
    // Too narrow to resolve in log space; the limit is the point itself.
    return infimum(h);
  }
  return std::exp(avg(mapped));
}

BoundPair m_bound(const MeasureSpec& spec, double lo, double hi) {
  if (!(lo < hi)) throw InvalidInterval("m_bound requires lo < hi");
  if (!spec.domain.contains(lo) || !spec.domain.contains(hi)) {
    throw DomainError("interval exceeds the domain of measure '" + spec.name +
                      "'");
  }
  const auto& w = spec.density;
  switch (spec.density_shape) {
    case DensityShape::decreasing: return {w(hi), w(lo), true};
    case DensityShape::increasing: return {w(lo), w(hi), true};
    case DensityShape::constant: return {w(lo), w(lo), true};
    case DensityShape::none: break;
  }

  // Dyadic subintervals; every estimate is an attained ratio, so the pair
  // brackets from inside.
  BoundPair b{std::numeric_limits<double>::infinity(), 0.0, false};
  for (int level = 0; level <= 10; ++level) {
    const int pieces = 1 << level;
    for (int i = 0; i < pieces; ++i) {
      const double a = lo + (hi - lo) * i / pieces;
      const double c = i + 1 == pieces ? hi : lo + (hi - lo) * (i + 1) / pieces;
      const double ratio = mu(spec, IntervalSet::single(a, c)) / (c - a);
      b.m = std::min(b.m, ratio);
      b.M = std::max(b.M, ratio);
    }
  }
  return b;
}

std::vector<SweepRow> infinity_sweep(const MeasureSpec& spec,
                                     const IntervalSet& h,
                                     std::span<const double> shifts) {
  if (h.empty()) throw EmptySet("sweep of empty set");
  std::vector<SweepRow> rows;
  rows.reserve(shifts.size());
  for (double x : shifts) {
    if (!std::isfinite(x)) throw DomainError("shift must be finite");
    const IntervalSet hx = translate(h, x);
    SweepRow row;
    row.x = x;
    row.mean = mean(spec, hx).value;
    row.avg = avg(hx);
    row.abs_diff = std::abs(row.mean - row.avg);
    const BoundPair bp = m_bound(spec, infimum(hx), supremum(hx));
    row.ratio_bound = bp.M / bp.m;
    rows.push_back(row);
  }
  return rows;
}

double double_integral_mean(const MeasureSpec& spec, double a, double b,
                            double tol) {
  if (!(a < b)) throw InvalidInterval("double integral requires a < b");
  require_in_domain(spec, IntervalSet::single(a, b));

  const double rel = std::clamp(tol * 1e-2, 1e-12, 1e-8);
  const QuadratureOptions opts{1e-300, rel, 10000};
  const auto& w = spec.density;

  const double mass = quad(w, a, b, opts).value;
  auto inner = [&](double y) {
    return quad([&](double x) { return 0.5 * (x + y) * w(x); }, a, b, opts)
        .value;
  };
  const double numerator =
      quad([&](double y) { return inner(y) * w(y); }, a, b, opts).value;
  return numerator / (mass * mass);
}

}  // namespace measmean
