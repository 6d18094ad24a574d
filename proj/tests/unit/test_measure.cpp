#include <doctest.h>

#include <cmath>

#include "measmean/catalog.hpp"
#include "measmean/errors.hpp"
#include "measmean/measure.hpp"

using namespace measmean;

namespace {

// Strips the closed forms so that moments() must integrate the density.
MeasureSpec density_only(const MeasureSpec& s) {
  MeasureSpec d;
  d.name = s.name + "/density";
  d.domain = s.domain;
  d.density = s.density;
  d.density_shape = s.density_shape;
  return d;
}

// Keeps f and F but drops the cancellation-free increments.
MeasureSpec cdf_only(const MeasureSpec& s) {
  MeasureSpec d = s;
  d.mass_increment.reset();
  d.moment_increment.reset();
  return d;
}

}  // namespace

TEST_CASE("catalog lookup") {
  for (const auto& name : catalog_names()) CHECK(catalog(name).name == name);
  CHECK_THROWS_AS(catalog("cauchy"), UnknownMeasure);
}

TEST_CASE("catalog entries are internally consistent") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const MeasureSpec s = catalog(name);
    const double lo = s.domain.lo >= 0 ? 0.1 : -3.0;
    CHECK_NOTHROW(validate(s, lo, name == "exponential" ? 3.0 : 50.0));
  }
}

TEST_CASE("geometric mass and moment on [1, 4]") {
  const MeasureSpec g = catalog("geometric");
  const IntervalSet h = IntervalSet::single(1, 4);
  CHECK(mu(g, h) == doctest::Approx(0.0676676416183063459).epsilon(1e-15));
  CHECK(first_moment(g, h) == doctest::Approx(0.135335283236612692).epsilon(1e-15));
}

TEST_CASE("closed forms, cdf differences and quadrature agree") {
  const IntervalSet h =
      IntervalSet::normalize(std::vector<Interval>{{0.3, 0.9}, {1.5, 4}, {7, 20}});
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const MeasureSpec s = catalog(name);
    const Moments a = moments(s, h);
    const Moments b = moments(cdf_only(s), h);
    const Moments c = moments(density_only(s), h);
    CHECK(b.mass == doctest::Approx(a.mass).epsilon(1e-12));
    CHECK(b.moment == doctest::Approx(a.moment).epsilon(1e-12));
    CHECK(c.mass == doctest::Approx(a.mass).epsilon(1e-9));
    CHECK(c.moment == doctest::Approx(a.moment).epsilon(1e-9));
    CHECK(c.mass_err >= 0.0);
  }
}

TEST_CASE("increments stay accurate far from the origin") {
  const MeasureSpec g = catalog("geometric");
  const double x = 1e4;
  const IntervalSet h = IntervalSet::single(1 + x, 2 + x);
  // μ = (1/√(1+x) - 1/√(2+x)) / e², written without cancellation.
  const double a = std::sqrt(1 + x);
  const double b = std::sqrt(2 + x);
  const double expected = std::exp(-2.0) / (a * b * (a + b));
  CHECK(mu(g, h) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("domain checks") {
  const MeasureSpec g = catalog("geometric");
  CHECK_THROWS_AS(mu(g, IntervalSet::single(-1, 1)), DomainError);
  CHECK_THROWS_AS(require_in_domain(g, IntervalSet::single(0, 1)), DomainError);
  CHECK_NOTHROW(require_in_domain(catalog("lebesgue"), IntervalSet::single(-5, 5)));
  CHECK(mu(g, IntervalSet{}) == 0.0);
  Domain closed{1, 2, true, true};
  CHECK(closed.contains(1.0));
  CHECK_FALSE(Domain{1, 2}.contains(1.0));
}

TEST_CASE("scaled multiplies every component") {
  const MeasureSpec g = catalog("harmonic");
  const MeasureSpec s = scaled(g, 3.0);
  const IntervalSet h = IntervalSet::single(2, 6);
  CHECK(mu(s, h) == doctest::Approx(3 * mu(g, h)).epsilon(1e-15));
  CHECK(first_moment(s, h) == doctest::Approx(3 * first_moment(g, h)).epsilon(1e-15));
  CHECK(s.density(2.0) == doctest::Approx(3 * g.density(2.0)));
  CHECK(s.density_shape == g.density_shape);
}

TEST_CASE("validate catches an inconsistent spec") {
  MeasureSpec bad = catalog("square");
  bad.density = [](double x) { return 3.0 * x; };
  CHECK_THROWS_AS(validate(bad, 0.5, 5), DomainError);
  MeasureSpec negative = catalog("lebesgue");
  negative.density = [](double x) { return x; };
  negative.cdf.reset();
  negative.antiderivative.reset();
  CHECK_THROWS_AS(validate(negative, -1, 1), DomainError);
}

TEST_CASE("density ratio certificates") {
  const MeasureSpec geo = catalog("geometric");
  const MeasureSpec harm = catalog("harmonic");
  const MeasureSpec leb = catalog("lebesgue");
  // w_geo / w_harm = x^{3/2} / (4e²) increases.
  CHECK(density_ratio_increasing(geo, harm, 0.5, 50).status ==
        CertificateStatus::certified);
  CHECK(density_ratio_increasing(leb, geo, 0.1, 100).status ==
        CertificateStatus::certified);
  const auto r = density_ratio_increasing(geo, leb, 0.1, 100);
  CHECK(r.status == CertificateStatus::refuted);
  CHECK(r.x1 < r.x2);
  CHECK(r.r1 > r.r2);

  MeasureSpec anon = leb;
  anon.density_shape = DensityShape::none;
  CHECK(density_ratio_increasing(anon, geo, 0.1, 100).status ==
        CertificateStatus::inconclusive);
  CHECK_THROWS_AS(density_ratio_increasing(geo, leb, -1, 1), DomainError);
}

TEST_CASE("probe grid is interior and increasing") {
  for (auto [lo, hi] : {std::pair{0.1, 100.0}, std::pair{-2.0, 3.0}}) {
    const auto xs = probe_grid(lo, hi, 50);
    REQUIRE(xs.size() == 50);
    CHECK(xs.front() > lo);
    CHECK(xs.back() < hi);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) CHECK(xs[i] < xs[i + 1]);
  }
}
