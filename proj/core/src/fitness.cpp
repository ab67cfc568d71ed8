#include "dynforge/fitness.hpp"

#include <algorithm>

namespace dynforge {

const char* target_name(FitnessTarget t) {
  switch (t) {
    case FitnessTarget::HeightRatio: return "height_ratio";
    case FitnessTarget::Preperiodic: return "preperiodic";
    case FitnessTarget::Cycle: return "cycle";
    case FitnessTarget::Tail: return "tail";
  }
  return "unknown";
}

std::optional<FitnessTarget> target_from_name(const std::string& s) {
  if (s == "height_ratio") return FitnessTarget::HeightRatio;
  if (s == "preperiodic") return FitnessTarget::Preperiodic;
  if (s == "cycle") return FitnessTarget::Cycle;
  if (s == "tail") return FitnessTarget::Tail;
  return std::nullopt;
}

namespace {

int wandering_iterate_index(const Orbit& orbit) {
  return orbit.flavor == MapFlavor::Polynomial ? orbit.degree + 2
                                               : 2 * orbit.degree + 3;
}

// Interpolate + classify 0; shared front half of every target.
struct Prepared {
  DynSystem f;
  GapConstant gap;
  OrbitClassification cls;
};

std::optional<Prepared> prepare(const Orbit& orbit,
                                const FitnessOptions& options,
                                FitnessScore* sentinel_out) {
  try {
    DynSystem f = orbit_to_map(orbit);
    GapConstant gap = height_gap_constant(f);
    OrbitClassification cls =
        classify_orbit(f, ProjPoint(), options.classify_cap, &gap);
    return Prepared{std::move(f), gap, std::move(cls)};
  } catch (const Error& e) {
    *sentinel_out = FitnessScore::sentinel(std::string(e.code_name()) + ": " +
                                           e.what());
    return std::nullopt;
  }
}

double wandering_height(const Prepared& prep, const Orbit& orbit) {
  const int k = wandering_iterate_index(orbit);
  auto pts = prep.f.iterate(ProjPoint(), k);
  return naive_height(pts.back());
}

void fill_wandering_detail(FitnessScore& s, const Orbit& orbit) {
  s.detail["classification"] = "wandering";
  s.detail["iterate"] = wandering_iterate_index(orbit);
}

FitnessScore score_cycle_tail(const Orbit& orbit,
                              const FitnessOptions& options, int w_n,
                              int w_m) {
  FitnessScore s;
  auto prep = prepare(orbit, options, &s);
  if (!prep) return s;
  if (!prep->cls.preperiodic()) {
    s.value = wandering_height(*prep, orbit);
    fill_wandering_detail(s, orbit);
    return s;
  }
  const int m = prep->cls.tail_m;
  const int n = prep->cls.period_n;
  s.value = -static_cast<double>(w_n * n + w_m * m);
  s.detail["classification"] = "preperiodic";
  s.detail["tail_m"] = m;
  s.detail["period_n"] = n;
  s.detail["weights"] = {w_n, w_m};
  return s;
}

}  // namespace

FitnessScore score_height_ratio(const Orbit& orbit,
                                const FitnessOptions& options) {
  FitnessScore s;
  auto prep = prepare(orbit, options, &s);
  if (!prep) return s;
  if (prep->cls.preperiodic()) {
    return FitnessScore::sentinel("preperiodic critical orbit");
  }
  double h_m = 0;
  try {
    h_m = moduli_height(prep->f);
  } catch (const Error& e) {
    return FitnessScore::sentinel(std::string(e.code_name()) + ": " +
                                  e.what());
  }
  if (h_m == 0) return FitnessScore::sentinel("zero moduli height");

  // The eps contract min(1e-8, ratio * 1e-3) is relative to the *ratio*;
  // rescale the relative target so the height loop sees it on hhat.
  AdaptiveHeightOptions hopts = options.height;
  hopts.rel_eps = options.height.rel_eps / h_m;
  HeightValue hv =
      canonical_height_adaptive(prep->f, ProjPoint(), hopts, &prep->gap);

  s.value = hv.value / h_m;
  s.detail["classification"] = "wandering";
  s.detail["hhat"] = hv.value;
  s.detail["hhat_error"] = hv.error_bound;
  s.detail["moduli_height"] = h_m;
  return s;
}

FitnessScore score_preperiodic_count(const Orbit& orbit,
                                     const FitnessOptions& options) {
  FitnessScore s;
  auto prep = prepare(orbit, options, &s);
  if (!prep) return s;
  if (!prep->cls.preperiodic()) {
    s.value = wandering_height(*prep, orbit);
    fill_wandering_detail(s, orbit);
    return s;
  }
  CensusResult census;
  try {
    census = preperiodic_census(prep->f, options.census);
  } catch (const Error& e) {
    return FitnessScore::sentinel(std::string(e.code_name()) + ": " +
                                  e.what());
  }
  s.value = -static_cast<double>(census.count);
  s.detail["classification"] = "preperiodic";
  s.detail["census_count"] = census.count;
  s.detail["census_complete"] = census.complete;
  s.detail["tail_m"] = prep->cls.tail_m;
  s.detail["period_n"] = prep->cls.period_n;
  s.detail["max_tail"] = census.max_tail;
  s.detail["max_cycle"] = census.max_cycle;
  return s;
}

FitnessScore score_cycle(const Orbit& orbit, const FitnessOptions& options) {
  auto [w_n, w_m] = options.weights.value_or(std::pair<int, int>{5, 1});
  return score_cycle_tail(orbit, options, w_n, w_m);
}

FitnessScore score_tail(const Orbit& orbit, const FitnessOptions& options) {
  auto [w_n, w_m] = options.weights.value_or(std::pair<int, int>{1, 5});
  return score_cycle_tail(orbit, options, w_n, w_m);
}

FitnessScore evaluate_fitness(const Orbit& orbit, FitnessTarget target,
                              const FitnessOptions& options) {
  switch (target) {
    case FitnessTarget::HeightRatio: return score_height_ratio(orbit, options);
    case FitnessTarget::Preperiodic:
      return score_preperiodic_count(orbit, options);
    case FitnessTarget::Cycle: return score_cycle(orbit, options);
    case FitnessTarget::Tail: return score_tail(orbit, options);
  }
  fail(Errc::Internal, "unknown fitness target");
}

}  // namespace dynforge
