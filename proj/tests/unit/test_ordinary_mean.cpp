#include <doctest.h>

#include <cmath>

#include "measmean/errors.hpp"
#include "measmean/ordinary_mean.hpp"

using namespace measmean;

TEST_CASE("built-in means evaluate their closed forms") {
  CHECK(ordinary_mean("arithmetic")(2, 6) == 4.0);
  CHECK(ordinary_mean("geometric")(2, 8) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(ordinary_mean("harmonic")(2, 6) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(ordinary_mean("logarithmic")(1, std::exp(1.0)) ==
        doctest::Approx(std::exp(1.0) - 1).epsilon(1e-15));
  CHECK(ordinary_mean("logarithmic")(3, 3) == 3.0);
  CHECK(ordinary_mean("power:2")(1, 7) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(ordinary_mean("power:-1")(2, 6) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(ordinary_mean("power:0")(2, 8) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("unknown names") {
  CHECK_THROWS_AS(ordinary_mean("median"), UnknownMean);
  CHECK_THROWS_AS(ordinary_mean("power:"), UnknownMean);
  CHECK_THROWS_AS(ordinary_mean("power:2x"), UnknownMean);
  CHECK_THROWS_AS(ordinary_mean("power:inf"), UnknownMean);
}

TEST_CASE("analytic section slopes match central differences") {
  for (const char* name :
       {"arithmetic", "geometric", "harmonic", "logarithmic", "power:3"}) {
    CAPTURE(name);
    OrdinaryMean k = ordinary_mean(name);
    OrdinaryMean fd = k;
    fd.section_deriv.reset();
    for (double b : {0.3, 0.999, 1.0, 1.0005, 2.0, 40.0}) {
      CAPTURE(b);
      CHECK(k.section_slope(b) == doctest::Approx(fd.section_slope(b)).epsilon(1e-7));
    }
  }
}

TEST_CASE("check_mean accepts valid means and rejects bad ones") {
  for (const char* name : {"arithmetic", "geometric", "harmonic", "logarithmic", "power:2"}) {
    CHECK_NOTHROW(check_mean(ordinary_mean(name), 0.25, 64));
  }
  OrdinaryMean lopsided;
  lopsided.name = "lopsided";
  lopsided.eval = [](double a, double b) { return 0.3 * a + 0.7 * b; };
  CHECK_THROWS_AS(check_mean(lopsided, 0.25, 64), NotSymmetric);

  OrdinaryMean maximum;
  maximum.name = "max";
  maximum.eval = [](double a, double b) { return std::max(a, b); };
  CHECK_THROWS_AS(check_mean(maximum, 0.25, 64), NotStrictlyInternal);
}
