#include "measmean/commands.hpp"

#include <cmath>

#include "measmean/catalog.hpp"
#include "measmean/errors.hpp"
#include "measmean/gen_mean.hpp"
#include "measmean/mean2measure.hpp"
#include "measmean/report.hpp"
#include "measmean/set_expr.hpp"
#include "measmean/suites.hpp"

namespace measmean {

namespace {

constexpr std::string_view kBuiltPrefix = "built:";

Json interval_json(const IntervalSet& h) {
  Json out = Json::array();
  for (const auto& iv : h) out.push_back(Json::array({iv.lo, iv.hi}));
  return out;
}

Calibration parse_calibration(const std::string& s) {
  if (s == "density_limit") return Calibration::density_limit;
  if (s == "probe_pair") return Calibration::probe_pair;
  throw ParseError("unknown calibration '" + s + "'", 0);
}

std::string_view calibration_name(Calibration c) {
  return c == Calibration::density_limit ? "density_limit" : "probe_pair";
}

Json branch_json(const MeasureBranch* b) {
  if (b == nullptr) return nullptr;
  const double x_first = b->x_at(0);
  const double x_last = b->x_at(b->size() - 1);
  return Json{{"nodes", b->size()},
              {"log_distance_min", std::exp(b->t_at(0))},
              {"log_distance_max", std::exp(b->t_at(b->size() - 1))},
              {"x_min", std::min(x_first, x_last)},
              {"x_max", std::max(x_first, x_last)}};
}

}  // namespace

std::pair<double, double> parse_window(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ParseError("window must be 'lo,hi'", text.size());
  }
  double lo = 0.0;
  double hi = 0.0;
  try {
    lo = parse_number(std::string_view(text).substr(0, comma));
  } catch (const ParseError& e) {
    throw ParseError("bad window lower bound", e.offset());
  }
  try {
    hi = parse_number(std::string_view(text).substr(comma + 1));
  } catch (const ParseError& e) {
    throw ParseError("bad window upper bound", comma + 1 + e.offset());
  }
  if (!(lo < hi)) throw InvalidInterval("window requires lo < hi");
  return {lo, hi};
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const auto item = std::string_view(text).substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_number(item));
    } catch (const ParseError& e) {
      throw ParseError("bad list item", start + e.offset());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

MeasureSpec resolve_measure(const std::string& name, const RunConfig& cfg) {
  if (name.starts_with(kBuiltPrefix)) {
    BuildOptions opts;
    opts.points_per_branch = cfg.points;
    opts.calibration = parse_calibration(cfg.calibration);
    return build(ordinary_mean(name.substr(kBuiltPrefix.size())),
                 cfg.window_lo, cfg.window_hi, cfg.tol, opts);
  }
  return catalog(name);
}

CommandResult cmd_mean(const RunConfig& cfg) {
  const IntervalSet h = parse_interval_set(cfg.set);
  const MeasureSpec spec = resolve_measure(cfg.measure, cfg);
  const MeanReport r = mean(spec, h);
  Json j{{"value", r.value},   {"mass", r.mass},
         {"moment", r.moment}, {"err", r.err},
         {"measure", spec.name}, {"set", interval_json(h)}};
  return {dump_json(j), 0};
}

CommandResult cmd_construct(const RunConfig& cfg) {
  const OrdinaryMean k = ordinary_mean(cfg.mean);
  BuildOptions opts;
  opts.points_per_branch = cfg.points;
  opts.calibration = parse_calibration(cfg.calibration);
  const auto m =
      ConstructedMeasure::build(k, cfg.window_lo, cfg.window_hi, cfg.tol, opts);
  const MeasureSpec spec = m->spec();

  const auto xs = probe_grid(cfg.window_lo, cfg.window_hi, 20);
  double worst = 0.0;
  double worst_a = 0.0;
  double worst_b = 0.0;
  int pairs = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const double expected = k(xs[i], xs[j]);
      const double err =
          std::abs(reconstruct(spec, xs[i], xs[j]) - expected) /
          std::abs(expected);
      ++pairs;
      if (err > worst) {
        worst = err;
        worst_a = xs[i];
        worst_b = xs[j];
      }
    }
  }

  Json probes = Json::array();
  for (double x : probe_grid(cfg.window_lo, cfg.window_hi, 9)) {
    probes.push_back(Json{{"x", x}, {"F", m->F(x)}, {"f", m->f(x)},
                          {"w", m->w(x)}});
  }

  Json j{{"mean", k.name},
         {"window", Json::array({cfg.window_lo, cfg.window_hi})},
         {"x0", m->x0()},
         {"left_anchor", m->left_anchor()},
         {"left_scale", m->left_scale()},
         {"calibration", calibration_name(m->calibration_used())},
         {"density_limit_right", m->density_limit_right()},
         {"density_limit_left", m->density_limit_left()},
         {"shape", to_string(spec.density_shape)},
         {"grid",
          Json{{"points_per_branch", cfg.points},
               {"right", branch_json(m->right())},
               {"left", branch_json(m->left())}}},
         {"density_probes", probes},
         {"roundtrip",
          Json{{"pairs", pairs},
               {"max_rel_err", worst},
               {"worst_pair", Json::array({worst_a, worst_b})}}}};
  return {dump_json(j), 0};
}

CommandResult cmd_compare(const RunConfig& cfg) {
  const MeasureSpec mu_spec = resolve_measure(cfg.mu, cfg);
  const MeasureSpec nu_spec = resolve_measure(cfg.nu, cfg);
  const LeqCertificate c =
      certify_leq(mu_spec, nu_spec, cfg.window_lo, cfg.window_hi, cfg.n_probe,
                  cfg.n_random, cfg.seed);
  Json j{{"status", to_string(c.status)},
         {"reason", c.reason},
         {"mu", mu_spec.name},
         {"nu", nu_spec.name},
         {"window", Json::array({cfg.window_lo, cfg.window_hi})},
         {"density_ratio",
          Json{{"status", to_string(c.ratio.status)},
               {"x1", c.ratio.x1},
               {"x2", c.ratio.x2},
               {"r1", c.ratio.r1},
               {"r2", c.ratio.r2}}},
         {"intervals_checked", c.intervals_checked},
         {"unions_checked", c.unions_checked}};
  if (c.status == CertificateStatus::refuted) {
    j["witness"] = interval_json(c.witness);
    j["mean_mu"] = c.mean_mu;
    j["mean_nu"] = c.mean_nu;
  }
  return {dump_json(j), c.status == CertificateStatus::certified ? 0 : 1};
}

CommandResult cmd_sweep(const RunConfig& cfg) {
  const IntervalSet h = parse_interval_set(cfg.set);
  const MeasureSpec spec = resolve_measure(cfg.measure, cfg);
  const auto rows = infinity_sweep(spec, h, cfg.shifts);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back(Json{{"x", r.x},
                         {"mean", r.mean},
                         {"avg", r.avg},
                         {"abs_diff", r.abs_diff},
                         {"ratio_bound", r.ratio_bound}});
    }
    return {dump_json(arr), 0};
  }
  if (cfg.format != "csv") {
    throw ParseError("unknown format '" + cfg.format + "'", 0);
  }
  std::vector<std::vector<double>> table;
  for (const auto& r : rows) {
    table.push_back({r.x, r.mean, r.avg, r.abs_diff, r.ratio_bound});
  }
  return {to_csv({"x", "mean", "avg", "abs_diff", "ratio_bound"}, table), 0};
}

CommandResult cmd_verify(const RunConfig& cfg) {
  const auto names = cfg.suites.empty() ? suite_names() : cfg.suites;
  Json arr = Json::array();
  bool all_pass = true;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, cfg.cases, cfg.seed);
    all_pass = all_pass && r.pass();
    Json j{{"name", r.name},
           {"cases", r.cases},
           {"failures", r.failures},
           {"pass", r.pass()}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    arr.push_back(std::move(j));
  }
  Json out{{"pass", all_pass}, {"seed", cfg.seed}, {"suites", arr}};
  return {dump_json(out), all_pass ? 0 : 1};
}

}  // namespace measmean
