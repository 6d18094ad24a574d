#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "measmean/errors.hpp"
#include "measmean/quadrature.hpp"
#include "measmean/root_find.hpp"

using namespace measmean;

TEST_CASE("quad integrates smooth functions to tolerance") {
  CHECK(quad([](double x) { return x * x; }, 0, 1).value ==
        doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(quad([](double x) { return std::exp(x); }, 0, 1).value ==
        doctest::Approx(std::expm1(1.0)).epsilon(1e-14));
  const auto r = quad([](double x) { return std::sin(x); }, 0, std::numbers::pi, 1e-14, 1e-14);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(r.evaluations % 15 == 0);
}

TEST_CASE("quad handles an integrable endpoint singularity") {
  const auto r = quad([](double x) { return 1.0 / std::sqrt(x); }, 0, 1,
                      QuadratureOptions{1e-10, 1e-10, 100000});
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("quad error paths") {
  CHECK_THROWS_AS(quad([](double x) { return x; }, 1, 1), InvalidInterval);
  CHECK_THROWS_AS(quad([](double x) { return x; }, 2, 1), InvalidInterval);
  CHECK_THROWS_AS(
      quad([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 0, 1),
      DomainError);
  try {
    quad([](double x) { return std::sin(1.0 / x); }, 1e-6, 1,
         QuadratureOptions{1e-15, 1e-15, 4});
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(std::isfinite(e.best_estimate()));
    CHECK(e.error_estimate() > 0.0);
  }
}

TEST_CASE("find_root on monotone and awkward brackets") {
  const auto r = find_root([](double x) { return std::cos(x) - x; }, 0, 1);
  CHECK(r.converged);
  CHECK(r.x == doctest::Approx(0.73908513321516064).epsilon(1e-14));

  // Very flat on one side: false position alone would crawl.
  const auto s = find_root([](double x) { return std::pow(x, 9) - 1e-9; }, 0, 4);
  CHECK(s.converged);
  CHECK(s.x == doctest::Approx(0.1).epsilon(1e-12));

  const auto e = find_root([](double x) { return x - 2.0; }, 2, 5);
  CHECK(e.x == 2.0);
}

TEST_CASE("find_root rejects invalid brackets") {
  CHECK_THROWS_AS(find_root([](double x) { return x * x + 1; }, -1, 1), DomainError);
  CHECK_THROWS_AS(find_root([](double x) { return x; }, 1, -1), DomainError);
}
