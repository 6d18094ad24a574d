#include "measmean/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "measmean/errors.hpp"

namespace measmean {

namespace {

void check_endpoints(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidInterval("interval endpoints must be finite");
  }
  if (lo > hi) {
    throw InvalidInterval("interval has lo > hi: [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
  }
}

}  // namespace

IntervalSet IntervalSet::normalize(
    std::span<const std::pair<double, double>> raw) {
  std::vector<Interval> v;
  v.reserve(raw.size());
  for (const auto& [lo, hi] : raw) v.push_back({lo, hi});
  return normalize(std::move(v));
}

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
  for (const auto& iv : raw) check_endpoints(iv.lo, iv.hi);
  std::erase_if(raw, [](const Interval& iv) { return !(iv.lo < iv.hi); });
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });

  IntervalSet out;
  for (const auto& iv : raw) {
    if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi) {
      out.intervals_.back().hi = std::max(out.intervals_.back().hi, iv.hi);
    } else {
      out.intervals_.push_back(iv);
    }
  }
  return out;
}

IntervalSet IntervalSet::single(double lo, double hi) {
  return normalize(std::vector<Interval>{{lo, hi}});
}

std::vector<std::pair<double, double>> IntervalSet::pairs() const {
  std::vector<std::pair<double, double>> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) out.emplace_back(iv.lo, iv.hi);
  return out;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return IntervalSet::normalize(std::move(all));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double lo = std::max(a[i].lo, b[j].lo);
    const double hi = std::min(a[i].hi, b[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalSet::normalize(std::move(out));
}

IntervalSet subtract(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  std::size_t j = 0;
  for (const auto& iv : a) {
    double cursor = iv.lo;
    while (j < b.size() && b[j].hi <= cursor) ++j;
    std::size_t k = j;
    while (k < b.size() && b[k].lo < iv.hi) {
      if (b[k].lo > cursor) out.push_back({cursor, b[k].lo});
      cursor = std::max(cursor, b[k].hi);
      if (cursor >= iv.hi) break;
      ++k;
    }
    if (cursor < iv.hi) out.push_back({cursor, iv.hi});
  }
  return IntervalSet::normalize(std::move(out));
}

IntervalSet symdiff(const IntervalSet& a, const IntervalSet& b) {
  return set_union(subtract(a, b), subtract(b, a));
}

IntervalSet translate(const IntervalSet& h, double x) {
  std::vector<Interval> out;
  out.reserve(h.size());
  for (const auto& iv : h) out.push_back({iv.lo + x, iv.hi + x});
  return IntervalSet::normalize(std::move(out));
}

IntervalSet slice_below(const IntervalSet& h, double y) {
  std::vector<Interval> out;
  for (const auto& iv : h) {
    if (iv.lo >= y) break;
    out.push_back({iv.lo, std::min(iv.hi, y)});
  }
  return IntervalSet::normalize(std::move(out));
}

IntervalSet slice_above(const IntervalSet& h, double y) {
  std::vector<Interval> out;
  for (const auto& iv : h) {
    if (iv.hi <= y) continue;
    out.push_back({std::max(iv.lo, y), iv.hi});
  }
  return IntervalSet::normalize(std::move(out));
}

double lebesgue(const IntervalSet& h) {
  double total = 0.0;
  for (const auto& iv : h) total += iv.length();
  return total;
}

double infimum(const IntervalSet& h) {
  if (h.empty()) throw EmptySet("infimum of empty set");
  return h.intervals().front().lo;
}

double supremum(const IntervalSet& h) {
  if (h.empty()) throw EmptySet("supremum of empty set");
  return h.intervals().back().hi;
}

bool contains(const IntervalSet& a, const IntervalSet& b) {
  return subtract(b, a).empty();
}

bool disjoint(const IntervalSet& a, const IntervalSet& b) {
  return intersect(a, b).empty();
}

bool member(const IntervalSet& h, double x) {
  auto it = std::upper_bound(
      h.begin(), h.end(), x,
      [](double v, const Interval& iv) { return v < iv.lo; });
  if (it == h.begin()) return false;
  --it;
  return x <= it->hi;
}

}  // namespace measmean
