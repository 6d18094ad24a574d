#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "measmean/errors.hpp"
#include "measmean/interval_set.hpp"
#include "measmean/random_sets.hpp"

using namespace measmean;

namespace {

IntervalSet make(std::vector<std::pair<double, double>> raw) {
  return IntervalSet::normalize(raw);
}

}  // namespace

TEST_CASE("normalize sorts, merges and drops degenerate pieces") {
  const IntervalSet h = make({{3, 4}, {0, 1}, {1, 2}, {5, 5}, {3.5, 6}});
  REQUIRE(h.size() == 2);
  CHECK(h[0] == Interval{0, 2});
  CHECK(h[1] == Interval{3, 6});
  CHECK(make({{2, 2}}).empty());
  CHECK(make({}).empty());
}

TEST_CASE("normalize rejects reversed and non-finite endpoints") {
  CHECK_THROWS_AS(make({{2, 1}}), InvalidInterval);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(make({{0, inf}}), InvalidInterval);
  CHECK_THROWS_AS(make({{std::nan(""), 1}}), InvalidInterval);
  CHECK_THROWS_AS(IntervalSet::single(1, 0), InvalidInterval);
}

TEST_CASE("set algebra on small cases") {
  const IntervalSet a = make({{0, 2}, {4, 6}});
  const IntervalSet b = make({{1, 5}});
  CHECK(set_union(a, b) == make({{0, 6}}));
  CHECK(intersect(a, b) == make({{1, 2}, {4, 5}}));
  CHECK(subtract(a, b) == make({{0, 1}, {5, 6}}));
  CHECK(subtract(b, a) == make({{2, 4}}));
  CHECK(symdiff(a, b) == make({{0, 1}, {2, 4}, {5, 6}}));
  CHECK(symdiff(a, a).empty());
  CHECK(lebesgue(a) == 4.0);
}

TEST_CASE("translate, slices and order statistics") {
  const IntervalSet a = make({{0, 1}, {2, 3}});
  CHECK(translate(a, 10) == make({{10, 11}, {12, 13}}));
  CHECK(slice_below(a, 2.5) == make({{0, 1}, {2, 2.5}}));
  CHECK(slice_above(a, 0.5) == make({{0.5, 1}, {2, 3}}));
  CHECK(slice_below(a, -1).empty());
  CHECK(infimum(a) == 0.0);
  CHECK(supremum(a) == 3.0);
  CHECK_THROWS_AS(infimum(IntervalSet{}), EmptySet);
  CHECK_THROWS_AS(supremum(IntervalSet{}), EmptySet);
}

TEST_CASE("membership, containment and disjointness") {
  const IntervalSet a = make({{0, 1}, {2, 3}});
  CHECK(member(a, 0.0));
  CHECK(member(a, 1.0));
  CHECK(member(a, 2.5));
  CHECK_FALSE(member(a, 1.5));
  CHECK_FALSE(member(a, 3.5));
  CHECK(contains(a, make({{0.2, 0.8}, {2, 3}})));
  CHECK_FALSE(contains(a, make({{0.5, 2.5}})));
  CHECK(disjoint(make({{0, 1}}), make({{1, 2}})));
  CHECK_FALSE(disjoint(make({{0, 1.5}}), make({{1, 2}})));
}

TEST_CASE("random sets satisfy the measure identities of the algebra") {
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    const IntervalSet a = random_union(rng, -10, 10, 1, 6);
    const IntervalSet b = random_union(rng, -10, 10, 1, 6);
    const double la = lebesgue(a);
    const double lb = lebesgue(b);
    const double lu = lebesgue(set_union(a, b));
    const double li = lebesgue(intersect(a, b));
    CHECK(lu + li == doctest::Approx(la + lb).epsilon(1e-12));
    CHECK(lebesgue(subtract(a, b)) == doctest::Approx(la - li).epsilon(1e-9).scale(20));
    CHECK(symdiff(a, b) == subtract(set_union(a, b), intersect(a, b)));
    CHECK(contains(set_union(a, b), a));
    CHECK(disjoint(subtract(a, b), b));
    CHECK(set_union(a, b) == set_union(b, a));
    CHECK(intersect(a, b) == intersect(b, a));
    // Canonical form: strictly separated, nondegenerate, increasing.
    const IntervalSet u = set_union(a, b);
    for (std::size_t k = 0; k < u.size(); ++k) {
      CHECK(u[k].lo < u[k].hi);
      if (k + 1 < u.size()) CHECK(u[k].hi < u[k + 1].lo);
    }
  }
}
