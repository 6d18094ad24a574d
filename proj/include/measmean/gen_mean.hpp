#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "measmean/interval_set.hpp"
#include "measmean/measure.hpp"

namespace measmean {

/// M^μ(H) = ∫_H x dμ / μ(H), with the pieces it was computed from.
struct MeanReport {
  double value = 0.0;
  double mass = 0.0;
  double moment = 0.0;
  double err = 0.0;
};

/// Density bounds m_I <= μ(J)/λ(J) <= M_I over measurable J ⊆ I.
struct BoundPair {
  double m = 0.0;
  double M = 0.0;
  bool exact = false;
};

/// Throws EmptySet for empty h, DomainError when h leaves the domain.
MeanReport mean(const MeasureSpec& spec, const IntervalSet& h);

/// The ordinary mean derived from μ: M^μ([a, b]). Throws InvalidInterval
/// unless a < b.
double ordinary(const MeasureSpec& spec, double a, double b);

/// Lebesgue centroid of h. Throws EmptySet.
double avg(const IntervalSet& h);

/// d_μ(A, B) = μ(A Δ B).
double pseudo_metric(const MeasureSpec& spec, const IntervalSet& a,
                     const IntervalSet& b);

/// |M(∪ parts) - Σ μ(P) M(P) / Σ μ(P)| for pairwise disjoint parts.
/// Throws NotDisjoint if two parts overlap in positive length.
double decompose_check(const MeasureSpec& spec,
                       std::span<const IntervalSet> parts);

/// Gaps |M(H_i) - M(H_last)| along a chain descending by inclusion.
/// Throws NotNested.
std::vector<double> cantor_probe(const MeasureSpec& spec,
                                 std::span<const IntervalSet> chain);

struct MonotonicityReport {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double mean_ab = 0.0;
  double mean_ac = 0.0;
  double mean_abc = 0.0;
  bool disjoint_monotone = true;
  bool union_monotone = true;
  std::string detail;

  bool pass() const { return disjoint_monotone && union_monotone; }
};

/// Checks the disjoint-monotone implication on (A, B) and the
/// union-monotone implication (both directions, with strictness
/// propagation) on (A, B, C). Throws NotDisjoint unless A ∩ B and B ∩ C
/// are null.
MonotonicityReport monotonicity_probe(const MeasureSpec& spec,
                                      const IntervalSet& a,
                                      const IntervalSet& b,
                                      const IntervalSet& c);

struct LeqCertificate {
  CertificateStatus status = CertificateStatus::inconclusive;
  std::string reason;
  IntervalSet witness;
  double mean_mu = 0.0;
  double mean_nu = 0.0;
  RatioCertificate ratio;
  int intervals_checked = 0;
  int unions_checked = 0;
};

/// Certifies M^μ(H) <= M^ν(H) on a window via the two sufficient
/// conditions (interval-wise inequality and increasing dν/dμ), then
/// validates on random unions of 1 to 5 intervals. Any violation beyond
/// 1e-9 refutes with a witness.
LeqCertificate certify_leq(const MeasureSpec& mu_spec,
                           const MeasureSpec& nu_spec, double lo, double hi,
                           int n_probe = 200, int n_random = 1000,
                           std::uint64_t seed = 20180410);

/// e^{Avg(log H)}. Throws DomainError unless inf H > 0.
double exp_avg_log(const IntervalSet& h);

/// m_I and M_I for I = [lo, hi]. Endpoint density values for monotone
/// densities (exact); inner grid estimates otherwise.
BoundPair m_bound(const MeasureSpec& spec, double lo, double hi);

struct SweepRow {
  double x = 0.0;
  double mean = 0.0;
  double avg = 0.0;
  double abs_diff = 0.0;
  double ratio_bound = 0.0;
};

/// One row per shift: M^μ(H+x), Avg(H+x) and M_{I+x}/m_{I+x} with
/// I = [inf H, sup H].
std::vector<SweepRow> infinity_sweep(const MeasureSpec& spec,
                                     const IntervalSet& h,
                                     std::span<const double> shifts);

/// ∫∫_{[a,b]^2} (x+y)/2 dμ(x) dμ(y) / μ([a,b])^2 by iterated quadrature of
/// the density.
double double_integral_mean(const MeasureSpec& spec, double a, double b,
                            double tol = 1e-8);

}  // namespace measmean
