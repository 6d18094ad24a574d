#pragma once

#include <span>
#include <utility>
#include <vector>

namespace measmean {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Canonical finite union of closed intervals.
///
/// Intervals are nondegenerate (lo < hi) and strictly separated
/// (hi_i < lo_{i+1}); touching or overlapping inputs are merged and zero
/// length pieces dropped. Endpoints compare exactly, there is no epsilon
/// merging. Open/closed endpoint distinctions are not modeled since every
/// measure used here is atomless.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Throws InvalidInterval on NaN/infinite endpoints or lo > hi.
  static IntervalSet normalize(std::span<const std::pair<double, double>> raw);
  static IntervalSet normalize(std::vector<Interval> raw);
  static IntervalSet single(double lo, double hi);

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  auto begin() const { return intervals_.begin(); }
  auto end() const { return intervals_.end(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }

  std::vector<std::pair<double, double>> pairs() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet subtract(const IntervalSet& a, const IntervalSet& b);
IntervalSet symdiff(const IntervalSet& a, const IntervalSet& b);

/// H + x.
IntervalSet translate(const IntervalSet& h, double x);
/// H ∩ (-inf, y].
IntervalSet slice_below(const IntervalSet& h, double y);
/// H ∩ [y, +inf).
IntervalSet slice_above(const IntervalSet& h, double y);

double lebesgue(const IntervalSet& h);
/// Throws EmptySet.
double infimum(const IntervalSet& h);
/// Throws EmptySet.
double supremum(const IntervalSet& h);

/// True when b ⊆ a up to a λ-null set.
bool contains(const IntervalSet& a, const IntervalSet& b);
/// True when a ∩ b is λ-null (sharing endpoints is allowed).
bool disjoint(const IntervalSet& a, const IntervalSet& b);
/// Point membership in the closed set.
bool member(const IntervalSet& h, double x);

}  // namespace measmean
