#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>

#include "dynforge/invariants.hpp"
#include "dynforge/preperiodic.hpp"

namespace dynforge {

// Minimize-the-score fitness. SENTINEL_WORST (worst = true) compares greater
// than every finite value, so degenerate orbits sink to the bottom of any
// ranking without magic constants. Serialized as the string "WORST".
struct FitnessScore {
  double value = 0;
  bool worst = false;
  nlohmann::json detail = nlohmann::json::object();

  static FitnessScore sentinel(const std::string& reason) {
    FitnessScore s;
    s.worst = true;
    s.detail["reason"] = reason;
    return s;
  }

  // Total order: finite values numerically, SENTINEL_WORST above all.
  friend bool operator<(const FitnessScore& a, const FitnessScore& b) {
    if (a.worst != b.worst) return !a.worst;
    if (a.worst) return false;
    return a.value < b.value;
  }

  nlohmann::json value_json() const {
    return worst ? nlohmann::json("WORST") : nlohmann::json(value);
  }
};

enum class FitnessTarget { HeightRatio, Preperiodic, Cycle, Tail };

const char* target_name(FitnessTarget t);
std::optional<FitnessTarget> target_from_name(const std::string& s);

struct FitnessOptions {
  // (w_n, w_m); unset picks the per-target default: (5, 1) for cycle,
  // (1, 5) for tail. Ignored by the other targets.
  std::optional<std::pair<int, int>> weights;
  AdaptiveHeightOptions height;
  CensusParams census = CensusParams::full();
  long classify_cap = 10000;

  // Cheaper settings for scoring inside the search loop; the hall of fame
  // re-scores finalists with the defaults.
  static FitnessOptions search_profile() {
    FitnessOptions o;
    o.census = CensusParams::fast();
    o.height.coord_log_budget = 2e5;
    return o;
  }
};

// hhat_f(0) / h_M(f); SENTINEL_WORST on interpolation failure, preperiodic 0,
// or h_M = 0. The canonical height is computed to
// eps = min(1e-8, ratio * 1e-3), evaluated against the running estimate.
FitnessScore score_height_ratio(const Orbit& orbit,
                                const FitnessOptions& options = {});

// Wandering 0: h(f^k(0)) with k = d+2 (polynomial) / 2d+3 (rational).
// Preperiodic 0: -census.count.
FitnessScore score_preperiodic_count(const Orbit& orbit,
                                     const FitnessOptions& options = {});

// Wandering 0: h(f^k(0)) as above. Preperiodic (m, n): -(w_n n + w_m m).
FitnessScore score_cycle(const Orbit& orbit,
                         const FitnessOptions& options = {});
FitnessScore score_tail(const Orbit& orbit, const FitnessOptions& options = {});

FitnessScore evaluate_fitness(const Orbit& orbit, FitnessTarget target,
                              const FitnessOptions& options = {});

}  // namespace dynforge
