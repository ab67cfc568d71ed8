#include <doctest.h>

#include <algorithm>

#include "dynforge/orbit.hpp"
#include "dynforge/preperiodic.hpp"

using namespace dynforge;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

const DynSystem kSquaring(2, ints({0, 0, 1}), ints({1}));

DynSystem map_of(MapFlavor flavor, int degree, std::initializer_list<long> v) {
  return orbit_to_map(Orbit{flavor, degree, ints(v)});
}

ProjPoint pt(long n) { return ProjPoint(Integer(n), Integer(1)); }

bool contains(const std::vector<ProjPoint>& points, const ProjPoint& p) {
  return std::find(points.begin(), points.end(), p) != points.end();
}

}  // namespace

TEST_CASE("classify_orbit on the squaring map") {
  auto zero = classify_orbit(kSquaring, pt(0));
  CHECK(zero.preperiodic());
  CHECK(zero.tail_m == 0);
  CHECK(zero.period_n == 1);
  auto one = classify_orbit(kSquaring, pt(1));
  CHECK(one.tail_m == 0);
  CHECK(one.period_n == 1);
  auto minus = classify_orbit(kSquaring, pt(-1));
  CHECK(minus.tail_m == 1);
  CHECK(minus.period_n == 1);
  auto inf = classify_orbit(kSquaring, ProjPoint::infinity());
  CHECK(inf.tail_m == 0);
  CHECK(inf.period_n == 1);
  CHECK_FALSE(classify_orbit(kSquaring, pt(2)).preperiodic());
  CHECK_FALSE(
      classify_orbit(kSquaring, ProjPoint(Integer(2), Integer(3))).preperiodic());
}

TEST_CASE("classify_orbit reference fixture (2,3)") {
  DynSystem f = map_of(MapFlavor::Polynomial, 2, {0, 1, -1, 2});
  auto c = classify_orbit(f, pt(0));
  REQUIRE(c.preperiodic());
  CHECK(c.tail_m == 2);
  CHECK(c.period_n == 3);
  // Witness records the 0, 1, -1, 2, -4, -1 walk up to the first repeat.
  REQUIRE(c.witness.size() >= 5);
  CHECK(c.witness[0] == pt(0));
  CHECK(c.witness[3] == pt(2));
  CHECK(c.witness[4] == pt(-4));
}

TEST_CASE("classify_orbit throws past the iteration cap") {
  // The (2,3) orbit 0,1,-1,2,-4 needs five steps before the first repeat,
  // and stays below the wandering escape bar the whole way.
  DynSystem f = map_of(MapFlavor::Polynomial, 2, {0, 1, -1, 2});
  CHECK_THROWS_AS(classify_orbit(f, pt(0), 4), Error);
  auto c = classify_orbit(f, pt(0), 5);
  CHECK(c.tail_m == 2);
  CHECK(c.period_n == 3);
}

TEST_CASE("rational preimages under the squaring map") {
  auto at_one = rational_preimages(kSquaring, pt(1));
  REQUIRE(at_one.points.size() == 2);
  CHECK(contains(at_one.points, pt(-1)));
  CHECK(contains(at_one.points, pt(1)));
  CHECK(at_one.complete);
  auto at_zero = rational_preimages(kSquaring, pt(0));
  CHECK(at_zero.points == std::vector<ProjPoint>{pt(0)});
  auto at_inf = rational_preimages(kSquaring, ProjPoint::infinity());
  CHECK(at_inf.points == std::vector<ProjPoint>{ProjPoint::infinity()});
  auto at_two = rational_preimages(kSquaring, pt(2));
  CHECK(at_two.points.empty());
  CHECK(at_two.complete);
}

TEST_CASE("rational periodic points of the squaring map") {
  auto periodic = rational_periodic_points(kSquaring, 3);
  REQUIRE(periodic.complete);
  // 0, 1, infinity are fixed; -1 is strictly preperiodic, not periodic.
  CHECK(periodic.points.size() == 3);
  for (const auto& [point, period] : periodic.points) {
    CHECK(period == 1);
    CHECK(point != pt(-1));
  }
}

TEST_CASE("census auto depth shrinks with the degree") {
  CHECK(census_auto_n_max(2) == 6);
  CHECK(census_auto_n_max(4) == 4);
  CHECK(census_auto_n_max(16) == 2);
  CHECK(census_auto_n_max(300) == 1);
}

TEST_CASE("census of the squaring map") {
  auto census = preperiodic_census(kSquaring, CensusParams::full());
  CHECK(census.complete);
  CHECK(census.count == 4);
  CHECK(contains(census.points, pt(-1)));
  CHECK(contains(census.points, pt(0)));
  CHECK(contains(census.points, pt(1)));
  CHECK(contains(census.points, ProjPoint::infinity()));
  CHECK(census.max_tail == 1);
  CHECK(census.max_cycle == 1);
  // Edges map every census point to its image; -1 -> 1 must be present.
  bool found = false;
  for (const auto& [src, dst] : census.edges)
    if (src == pt(-1) && dst == pt(1)) found = true;
  CHECK(found);
  CHECK(census.edges.size() == census.points.size());
}

TEST_CASE("census counts match the fixtures") {
  DynSystem nine = map_of(MapFlavor::Polynomial, 2, {0, 1, -1, 2});
  auto c9 = preperiodic_census(nine, CensusParams::full());
  CHECK(c9.complete);
  CHECK(c9.count == 9);
  CHECK(c9.max_tail == 2);
  CHECK(c9.max_cycle == 3);

  DynSystem seven = map_of(MapFlavor::Polynomial, 4, {0, -4, 1, -3, -1, -5});
  auto c7 = preperiodic_census(seven, CensusParams::full());
  CHECK(c7.complete);
  CHECK(c7.count == 7);

  DynSystem fourteen =
      map_of(MapFlavor::Rational, 2, {0, -1, -3, -6, -2, -4});
  auto c14 = preperiodic_census(fourteen, CensusParams::full());
  CHECK(c14.complete);
  CHECK(c14.count == 14);
  CHECK(c14.max_tail == 6);
  CHECK(c14.max_cycle == 2);
  // The critical orbit itself enters a 2-cycle after a tail of 5.
  auto zero = classify_orbit(fourteen, pt(0));
  CHECK(zero.tail_m == 5);
  CHECK(zero.period_n == 2);
}

TEST_CASE("fast census profile still closes small fixtures") {
  DynSystem nine = map_of(MapFlavor::Polynomial, 2, {0, 1, -1, 2});
  auto fast = preperiodic_census(nine, CensusParams::fast());
  CHECK(fast.complete);
  CHECK(fast.count == 9);
}

TEST_CASE("census respects the point budget") {
  CensusParams tight;
  tight.max_points = 3;
  auto census = preperiodic_census(kSquaring, tight);
  CHECK_FALSE(census.complete);
  CHECK(census.count <= 4);
}

TEST_CASE("dynamical compression flags full-span distinct orbits") {
  auto flag = [](MapFlavor flavor, int degree, std::initializer_list<long> v) {
    return detect_dynamical_compression(Orbit{flavor, degree, ints(v)});
  };
  // span 5 over length 4
  CHECK_FALSE(flag(MapFlavor::Polynomial, 2, {0, -2, 1, -3}));
  // exactly {-2..2}
  CHECK(flag(MapFlavor::Polynomial, 3, {0, 1, -1, 2, -2}));
  // duplicates
  CHECK_FALSE(flag(MapFlavor::Polynomial, 3, {0, 1, 0, 1, 2}));
  // span 7 over length 6
  CHECK_FALSE(flag(MapFlavor::Polynomial, 4, {0, 3, 4, 5, 1, -1}));
  // exactly {-6..0}
  CHECK(flag(MapFlavor::Polynomial, 5, {0, -1, -2, -6, -4, -5, -3}));
}
