#pragma once

#include "dynforge/dyn_system.hpp"

namespace dynforge {

// Naive (Weil) height h(a : b) = ln max(|a|, |b|) in lowest terms.
double naive_height(const ProjPoint& p);
double naive_height(const Rational& q);

// Constant C with d*h(P) - C <= h(f(P)) <= d*h(P) + C for all P.
// upper: h(F) + ln(d+1). lower: from the Sylvester cofactor identities
// G1*F0 + G2*F1 = Res * x^(2d-1) (and y^(2d-1)), lower = h(G) + ln(2d).
struct GapConstant {
  double upper = 0;
  double lower = 0;
  double value = 0;  // max(upper, lower)
};
GapConstant height_gap_constant(const DynSystem& f);

struct HeightValue {
  double value = 0;
  double error_bound = 0;  // certified: |value - hhat_f(P)| <= error_bound
};

// Canonical height via the telescoping limit h(f^n P)/d^n, iterated in exact
// arithmetic until the tail bound C/((d-1) d^n) drops below eps. Preperiodic
// points short-circuit to exactly 0 on the first orbit repeat. Throws
// IterationCapExceeded if certification would need more than max_iterations.
HeightValue canonical_height(const DynSystem& f, const ProjPoint& p,
                             double eps, int max_iterations = 256);

// GA-facing variant: same iteration, but the target is
// min(abs_eps, rel_eps * running estimate) and a coordinate-size budget stops
// runaway growth early instead of throwing; the achieved bound is returned.
struct AdaptiveHeightOptions {
  double abs_eps = 1e-8;
  double rel_eps = 1e-3;
  int max_iterations = 64;
  // Bound on ln max|coordinate| of the iterates (~3e8 corresponds to tens of
  // megabytes per coordinate).
  double coord_log_budget = 3e8;
};
HeightValue canonical_height_adaptive(const DynSystem& f, const ProjPoint& p,
                                      const AdaptiveHeightOptions& opts,
                                      const GapConstant* gap = nullptr);

}  // namespace dynforge
