#include "measmean/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "measmean/catalog.hpp"
#include "measmean/errors.hpp"
#include "measmean/gen_mean.hpp"
#include "measmean/mean2measure.hpp"
#include "measmean/random_sets.hpp"
#include "measmean/set_expr.hpp"

namespace measmean {

namespace {

constexpr double kLo = 0.1;
constexpr double kHi = 100.0;

// Outcome of one case: empty when it passes, otherwise a description.
using CaseFn = std::function<std::string(Rng&, int)>;

const std::vector<MeasureSpec>& measures() {
  static const std::vector<MeasureSpec> all = [] {
    std::vector<MeasureSpec> v;
    for (const auto& name : catalog_names()) v.push_back(catalog(name));
    return v;
  }();
  return all;
}

const MeasureSpec& pick(int i) {
  const auto& all = measures();
  return all[static_cast<std::size_t>(i) % all.size()];
}

struct Window {
  double lo;
  double hi;
};

// Random sets for a measure are drawn from a window where its density
// varies by a factor that doubles can still resolve.
Window window_for(const MeasureSpec& spec) {
  if (spec.name == "exponential") return {-5.0, 5.0};
  return {kLo, kHi};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Splits the intervals of a random union into k nonempty, pairwise
// disjoint parts.
std::vector<IntervalSet> random_parts(Rng& rng, Window w, int k, int extra) {
  const IntervalSet h = random_union(rng, w.lo, w.hi, k, k + extra);
  std::vector<Interval> ivs(h.intervals().begin(), h.intervals().end());
  std::shuffle(ivs.begin(), ivs.end(), rng);
  std::vector<std::vector<Interval>> raw(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    raw[i % raw.size()].push_back(ivs[i]);
  }
  std::vector<IntervalSet> parts;
  for (auto& r : raw) parts.push_back(IntervalSet::normalize(std::move(r)));
  return parts;
}

std::string internality(Rng& rng, int i) {
  const auto& spec = pick(i);
  const Window w = window_for(spec);
  const IntervalSet h = random_union(rng, w.lo, w.hi, 1, 5);
  const double m = mean(spec, h).value;
  if (infimum(h) <= m && m <= supremum(h)) return {};
  return spec.name + " H=" + describe(h) + " mean=" + fmt(m);
}

// Sets of positive length have their infimum and supremum as
// accumulation points, so the mean must avoid both.
std::string strict_internality(Rng& rng, int i) {
  const auto& spec = pick(i);
  const Window w = window_for(spec);
  const IntervalSet h = random_union(rng, w.lo, w.hi, 1, 5);
  const double m = mean(spec, h).value;
  if (infimum(h) < m && m < supremum(h)) return {};
  return spec.name + " H=" + describe(h) + " mean=" + fmt(m);
}

std::string disjoint_monotone(Rng& rng, int i) {
  const auto& spec = pick(i);
  const auto p = random_parts(rng, window_for(spec), 2, 4);
  const auto r = monotonicity_probe(spec, p[0], p[1], IntervalSet{});
  if (r.disjoint_monotone) return {};
  return spec.name + " A=" + describe(p[0]) + " B=" + describe(p[1]) + " " +
         r.detail;
}

std::string union_monotone(Rng& rng, int i) {
  const auto& spec = pick(i);
  const auto p = random_parts(rng, window_for(spec), 3, 4);
  const auto r = monotonicity_probe(spec, p[0], p[1], p[2]);
  if (r.pass()) return {};
  return spec.name + " A=" + describe(p[0]) + " B=" + describe(p[1]) +
         " C=" + describe(p[2]) + " " + r.detail;
}

std::string decomposition(Rng& rng, int i) {
  const auto& spec = pick(i);
  std::uniform_int_distribution<int> count(2, 4);
  const auto parts = random_parts(rng, window_for(spec), count(rng), 3);
  IntervalSet all;
  for (const auto& p : parts) all = set_union(all, p);
  const double m = mean(spec, all).value;
  const double residual = decompose_check(spec, parts);
  if (residual <= 1e-9 * (1.0 + std::abs(m))) return {};
  return spec.name + " H=" + describe(all) + " residual=" + fmt(residual);
}

// H_i = H extended above its supremum by ext/i; the gaps to M(H) must
// shrink monotonically and end two orders of magnitude below the first.
std::string cantor_continuity(Rng& rng, int i) {
  const auto& spec = pick(i);
  const Window w = window_for(spec);
  const IntervalSet h = random_union(rng, w.lo, w.hi, 1, 4);
  const Interval& top = h.intervals().back();
  const double ext = 0.1 * top.length();
  std::vector<IntervalSet> chain;
  for (int k = 1; k <= 100; ++k) {
    chain.push_back(set_union(
        h, IntervalSet::single(top.hi, top.hi + ext / static_cast<double>(k))));
  }
  chain.push_back(h);
  const auto gaps = cantor_probe(spec, chain);
  for (std::size_t k = 0; k + 1 < gaps.size(); ++k) {
    if (gaps[k + 1] > gaps[k] * (1.0 + 1e-9)) {
      return spec.name + " H=" + describe(h) + " gap rises at step " +
             std::to_string(k + 1) + ": " + fmt(gaps[k]) + " -> " +
             fmt(gaps[k + 1]);
    }
  }
  const double first = gaps.front();
  const double last = gaps[gaps.size() - 2];
  if (first > 0.0 && last <= 0.05 * first && gaps.back() == 0.0) return {};
  return spec.name + " H=" + describe(h) + " first gap " + fmt(first) +
         ", gap at step 100 " + fmt(last);
}

// Toggles [p, p + δ] in H for δ halving from δ0. The segment stays on one
// side of H's boundary and of M(H), so |ΔM| has to fall with d_μ, down
// below any target.
std::string dmu_continuity(Rng& rng, int i) {
  const auto& spec = pick(i);
  const Window w = window_for(spec);
  const IntervalSet h = random_union(rng, w.lo, w.hi, 1, 5);
  const double m = mean(spec, h).value;
  const double margin = 0.01 * (w.hi - w.lo);
  double p = 0.0;
  double room = 0.0;
  for (;;) {
    p = random_point(rng, w.lo, w.hi - margin);
    // Distance to the next boundary of H (or of the window).
    room = w.hi - p;
    for (const auto& iv : h) {
      if (iv.lo > p) room = std::min(room, iv.lo - p);
      if (iv.hi > p) room = std::min(room, iv.hi - p);
    }
    if (p < m) room = std::min(room, m - p);
    if (room > 0.0 && std::abs(p - m) > 1e-9 * std::abs(m)) break;
  }
  double delta = std::min({0.5 * room, 0.1, 0.25 * lebesgue(h)});
  if (w.lo > 0.0) delta = std::min(delta, 0.1 * p);
  // Start in the perturbative regime: the toggled piece carries at most a
  // tenth of μ(H).
  const double mass = mu(spec, h);
  while (mu(spec, IntervalSet::single(p, p + delta)) > 0.1 * mass) delta *= 0.5;
  const bool inside = member(h, p);
  const double target = 1e-6 * (1.0 + std::abs(m));
  double prev_diff = std::numeric_limits<double>::infinity();
  double prev_dist = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 60; ++k, delta *= 0.5) {
    const IntervalSet seg = IntervalSet::single(p, p + delta);
    const IntervalSet hk = inside ? subtract(h, seg) : set_union(h, seg);
    const double dist = pseudo_metric(spec, h, hk);
    const double diff = std::abs(mean(spec, hk).value - m);
    if (!(dist < prev_dist) || !(diff < prev_diff)) {
      return spec.name + " H=" + describe(h) + " p=" + fmt(p) +
             " delta=" + fmt(delta) + " d=" + fmt(dist) + " |dM|=" +
             fmt(diff) + " previous |dM|=" + fmt(prev_diff);
    }
    if (diff < target) return {};
    prev_diff = diff;
    prev_dist = dist;
  }
  return spec.name + " H=" + describe(h) + " p=" + fmt(p) +
         " |dM| never fell below " + fmt(target);
}

// Unbounded sets: a Lebesgue-small addition far away moves Avg by a lot.
std::string unbounded_counterexample() {
  const double delta = 0.01;
  const IntervalSet h1 = IntervalSet::single(0.0, 1.0);
  const IntervalSet h2 =
      set_union(h1, IntervalSet::single(1.0 / delta, 1.0 / delta + delta));
  const double d = pseudo_metric(catalog("lebesgue"), h1, h2);
  const double a1 = avg(h1);
  const double a2 = avg(h2);
  if (a1 == 0.5 && a2 > 0.75 && std::abs(d - delta) <= 1e-12) return {};
  return "H1=" + describe(h1) + " H2=" + describe(h2) + " Avg(H1)=" +
         fmt(a1) + " Avg(H2)=" + fmt(a2) + " d=" + fmt(d);
}

std::string am_gm(Rng& rng, int) {
  static const MeasureSpec geo = catalog("geometric");
  const IntervalSet h = random_union(rng, kLo, kHi, 1, 5);
  const double m = mean(geo, h).value;
  const double a = avg(h);
  if (m <= a + 1e-9) return {};
  return "H=" + describe(h) + " geometric mean=" + fmt(m) + " Avg=" + fmt(a);
}

std::string avg_translation(Rng& rng, int) {
  const IntervalSet h = random_union(rng, kLo, kHi, 1, 5);
  const double x = random_point(rng, -10.0, 10.0);
  const double lhs = avg(translate(h, x));
  const double rhs = avg(h) + x;
  if (std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(x))) {
    return {};
  }
  return "H=" + describe(h) + " x=" + fmt(x) + " Avg(H+x)=" + fmt(lhs) +
         " Avg(H)+x=" + fmt(rhs);
}

std::string exp_avg_log_single(Rng& rng, int) {
  static const MeasureSpec geo = catalog("geometric");
  const IntervalSet h = random_interval(rng, kLo, kHi);
  const double a = exp_avg_log(h);
  const double g = mean(geo, h).value;
  if (std::abs(a - g) <= 1e-9 * g) return {};
  return "H=" + describe(h) + " exp(Avg log H)=" + fmt(a) +
         " geometric mean=" + fmt(g);
}

std::string scale_invariance(Rng& rng, int i) {
  const auto& spec = pick(i);
  const Window w = window_for(spec);
  constexpr std::array<double, 3> scales = {0.5, 3.0, 10.0};
  std::vector<IntervalSet> probes;
  for (int k = 0; k < 4; ++k) probes.push_back(random_union(rng, w.lo, w.hi, 1, 5));
  for (double c : scales) {
    const MeasureSpec s = scaled(spec, c);
    for (const auto& p : probes) {
      const double m0 = mean(spec, p).value;
      const double m1 = mean(s, p).value;
      if (std::abs(m0 - m1) > 1e-12 * std::abs(m0)) {
        return spec.name + " c=" + fmt(c) + " H=" + describe(p) + " mean " +
               fmt(m0) + " vs " + fmt(m1);
      }
    }
    const auto u = uniqueness_check(spec, s, probes);
    if (!u.proportional || std::abs(u.c - c) > 1e-6 * c) {
      return spec.name + " c=" + fmt(c) + " recovered c=" + fmt(u.c) +
             (u.proportional ? "" : " (not proportional)");
    }
  }
  return {};
}

struct Suite {
  const char* name;
  CaseFn run;
  std::function<std::string()> extra;  // one deterministic case, optional
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"internality", internality, {}},
      {"strict_internality", strict_internality, {}},
      {"disjoint_monotone", disjoint_monotone, {}},
      {"union_monotone", union_monotone, {}},
      {"decomposition", decomposition, {}},
      {"cantor_continuity", cantor_continuity, {}},
      {"dmu_continuity", dmu_continuity, unbounded_counterexample},
      {"am_gm", am_gm, {}},
      {"avg_translation", avg_translation, {}},
      {"exp_avg_log", exp_avg_log_single, {}},
      {"scale_invariance", scale_invariance, {}},
  };
  return all;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : suites()) names.emplace_back(s.name);
  return names;
}

SuiteResult run_suite(std::string_view name, int cases, std::uint64_t seed) {
  const auto& all = suites();
  const auto it = std::find_if(all.begin(), all.end(),
                               [&](const Suite& s) { return s.name == name; });
  if (it == all.end()) {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  SuiteResult r;
  r.name = it->name;
  Rng rng(seed);
  auto record = [&r](std::string outcome) {
    ++r.cases;
    if (outcome.empty()) return;
    if (r.failures++ == 0) r.witness = std::move(outcome);
  };
  for (int i = 0; i < cases; ++i) {
    try {
      record(it->run(rng, i));
    } catch (const Error& e) {
      record(std::string("error: ") + e.what());
    }
  }
  if (it->extra) record(it->extra());
  return r;
}

std::string describe(const IntervalSet& h) {
  if (h.empty()) return "{}";
  SetExpr u;
  u.kind = SetExpr::Kind::union_of;
  for (const auto& iv : h) {
    SetExpr t;
    t.lo = iv.lo;
    t.hi = iv.hi;
    u.children.push_back(t);
  }
  return to_string(u);
}

}  // namespace measmean
