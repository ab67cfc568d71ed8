#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dynforge/heights.hpp"
#include "dynforge/orbit.hpp"

namespace dynforge {

// Verdict of iterating a single point. Preperiodic points report the minimal
// (tail_m, period_n); wandering points are certified by a naive-height
// witness above the gap bound (so the canonical height is provably positive).
struct OrbitClassification {
  enum class Status { Wandering, Preperiodic };
  Status status = Status::Wandering;
  int tail_m = 0;
  int period_n = 0;
  std::vector<ProjPoint> witness;  // orbit points seen, in order

  bool preperiodic() const { return status == Status::Preperiodic; }
};

// Iterates P, storing seen points; first repeat gives the minimal (m, n).
// Declares wandering as soon as h(f^k P) > C/(d-1) + ln 2. Throws
// IterationCapExceeded beyond the cap (pathological; preperiodic orbits
// repeat and wandering orbits cross the bound quickly).
OrbitClassification classify_orbit(const DynSystem& f, const ProjPoint& p,
                                   long cap = 10000,
                                   const GapConstant* gap = nullptr);

struct PreimageResult {
  std::vector<ProjPoint> points;  // sorted, deduplicated
  bool complete = true;           // false only if root finding hit its budget
};

// All rational P with f(P) = Q: rational roots of b F0(z) - a F1(z) for
// Q = (a : b), plus infinity when f(inf) = Q.
PreimageResult rational_preimages(const DynSystem& f, const ProjPoint& q);

struct PeriodicPoints {
  std::vector<std::pair<ProjPoint, int>> points;  // (point, minimal period)
  bool complete = true;
};

// Rational periodic points of period <= n_max: rational roots of the
// iterate forms Phi_n(z) = primitive(F0^n(z) - z F1^n(z)) for each n with
// d^n <= degree_cap, plus infinity when its orbit returns. Each point is
// re-verified by direct iteration and labeled with its minimal period.
PeriodicPoints rational_periodic_points(const DynSystem& f, int n_max,
                                        long degree_cap = 4096);

struct CensusParams {
  int n_max = 0;        // 0: auto — largest n with d^n <= 256, at most 6
  long h_scan = 100;    // classify every point with coordinates in [-h, h]
  size_t max_points = 4096;  // closure size cap; hitting it clears complete
  long classify_cap = 10000;

  static CensusParams full() { return {}; }
  // Cheaper settings for fitness scoring inside the search loop; finalists
  // are re-verified with full().
  static CensusParams fast() {
    CensusParams p;
    p.h_scan = 30;
    p.max_points = 512;
    return p;
  }
};

// Certified lower bound on the set of rational preperiodic points:
// seeds (periodic points, the orbit of 0 when finite, a height-bounded
// classification scan) are closed under rational preimages. `complete` is
// true only when no budget or incompleteness flag fired along the way; the
// reference fixtures in the test suite all verify complete.
struct CensusResult {
  size_t count = 0;
  std::vector<ProjPoint> points;  // sorted
  std::vector<std::pair<ProjPoint, ProjPoint>> edges;  // (P, f(P)), sorted
  int max_tail = 0;    // longest tail among census points
  int max_cycle = 0;   // longest cycle among census points
  bool complete = false;
};

CensusResult preperiodic_census(const DynSystem& f,
                                const CensusParams& params = {});

// True iff the orbit entries form a permutation of a consecutive integer
// interval (distinct entries, max - min + 1 == length).
bool detect_dynamical_compression(const Orbit& orbit);

// Auto n_max used by the census when params.n_max == 0.
int census_auto_n_max(int degree);

}  // namespace dynforge
