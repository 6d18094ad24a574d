#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "measmean/errors.hpp"
#include "measmean/random_sets.hpp"
#include "measmean/set_expr.hpp"

using namespace measmean;

namespace {

std::size_t offset_of(const std::string& text) {
  try {
    parse_set(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected ParseError for " << text);
  return 0;
}

}  // namespace

TEST_CASE("two-interval example with constants") {
  const IntervalSet h = parse_interval_set("[1, e^2] U [e^4, e^8]");
  REQUIRE(h.size() == 2);
  CHECK(h[0].lo == 1.0);
  CHECK(h[0].hi == doctest::Approx(7.38905609893065).epsilon(1e-13));
  CHECK(h[1].lo == doctest::Approx(54.5981500331442).epsilon(1e-13));
  CHECK(h[1].hi == doctest::Approx(2980.95798704173).epsilon(1e-13));
}

TEST_CASE("translated union") {
  const IntervalSet h = parse_interval_set("([1,2] U [3,4]) + 10");
  REQUIRE(h.size() == 2);
  CHECK(h[0] == Interval{11, 12});
  CHECK(h[1] == Interval{13, 14});
  CHECK(parse_interval_set("(([0,1]) + 1) + -3") == IntervalSet::single(-2, -1));
  CHECK(parse_interval_set("[0,1]U[1,2]") == IntervalSet::single(0, 2));
}

TEST_CASE("reversed interval") {
  CHECK_THROWS_AS(parse_set("[2,1]"), InvalidInterval);
  CHECK_THROWS_AS(parse_set("[1,1]"), InvalidInterval);
}

TEST_CASE("arithmetic precedence and associativity") {
  CHECK(parse_number("2+3*4") == 14.0);
  CHECK(parse_number("(2+3)*4") == 20.0);
  CHECK(parse_number("2^3^2") == 512.0);
  CHECK(parse_number("-2^2") == -4.0);
  CHECK(parse_number("2^-1") == 0.5);
  CHECK(parse_number("8/4/2") == 1.0);
  CHECK(parse_number("1-2-3") == -4.0);
  CHECK(parse_number("--3") == 3.0);
  CHECK(parse_number("1.5e2") == 150.0);
  CHECK(parse_number(".25") == 0.25);
  CHECK(parse_number("pi") == std::numbers::pi);
  CHECK(parse_number("sqrt(16) + exp(0) + log(e)") == 6.0);
  CHECK(parse_number("2*e") == 2 * std::numbers::e);
}

TEST_CASE("syntax errors carry byte offsets") {
  CHECK(offset_of("[1, 2") == 5);
  CHECK(offset_of("[1 2]") == 3);
  CHECK(offset_of("[1,2] U") == 7);
  CHECK(offset_of("[1,2] [3,4]") == 6);
  CHECK(offset_of("([1,2]) 3") == 8);
  CHECK(offset_of("[1, foo]") == 4);
  CHECK(offset_of("[1, log(0)]") == 4);
  CHECK(offset_of("[1, 1/0]") == 4);
  CHECK(offset_of("[1,2] UU [3,4]") == 6);
  CHECK_THROWS_AS(parse_set(""), ParseError);
  CHECK_THROWS_AS(parse_number("1 +"), ParseError);
  CHECK_THROWS_AS(parse_number("2 3"), ParseError);
}

TEST_CASE("printing round-trips") {
  for (const char* text :
       {"[1, e^2] U [e^4, e^8]", "([1,2] U [3,4]) + 10", "[-pi, 1/3]",
        "(([0.1, 0.2]) + 1e-7 U [5, 6]) + -2.5"}) {
    CAPTURE(text);
    const SetExpr e = parse_set(text);
    const std::string printed = to_string(e);
    CAPTURE(printed);
    CHECK(parse_interval_set(printed) == evaluate(e));
    CHECK(to_string(parse_set(printed)) == printed);
  }
}

TEST_CASE("random expressions round-trip") {
  Rng rng(3);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_real_distribution<double> shift(-1e3, 1e3);
  for (int i = 0; i < 300; ++i) {
    SetExpr u;
    u.kind = SetExpr::Kind::union_of;
    const int n = 1 + kind(rng);
    for (int k = 0; k < n; ++k) {
      const IntervalSet iv = random_interval(rng, -50, 50);
      SetExpr t;
      t.lo = iv[0].lo;
      t.hi = iv[0].hi;
      if (kind(rng) == 0) {
        SetExpr s;
        s.kind = SetExpr::Kind::shifted;
        s.shift = shift(rng);
        s.children.push_back(t);
        u.children.push_back(s);
      } else {
        u.children.push_back(t);
      }
    }
    const std::string printed = to_string(u);
    CAPTURE(printed);
    CHECK(parse_interval_set(printed) == evaluate(u));
  }
}
