#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dynforge/fitness.hpp"
#include "dynforge/rng.hpp"

namespace dynforge {

struct GAConfig {
  MapFlavor map_type = MapFlavor::Rational;
  int degree = 4;
  int population = 1000;
  int generations = 1000;
  double survival = 0.15;
  double reset_survival = 0.02;
  int reset_interval = 50;  // 0 disables resets
  bool normalize_orbit = true;
  long bound = 20;
  enum class Mixing { Crossover, Permutation };
  Mixing mixing_method = Mixing::Permutation;
  double mutation_rate = 0.05;
  enum class Mutation { All, Single };
  Mutation mutation_method = Mutation::All;
  FitnessTarget target = FitnessTarget::Preperiodic;
  // Early-stop threshold: stop once best score <= orbit_target. Left unset by
  // default — the scores of the discrete targets are negative, so a stale
  // threshold would stop a fresh run instantly.
  std::optional<double> orbit_target;
  // (w_n, w_m); unset lets each target pick its usual weights.
  std::optional<std::pair<int, int>> orbit_weights;
  unsigned long long seed = 0;

  // Throws ParseError naming the offending field.
  void validate() const;
};

struct Individual {
  Orbit orbit;
  FitnessScore score;
  std::optional<std::string> fingerprint;
};

bool orbit_lex_less(const Orbit& a, const Orbit& b);
// (score, lexicographic orbit) — the deterministic ranking order.
bool individual_less(const Individual& a, const Individual& b);

// Best-per-conjugacy-class archive: at most one entry per sigma fingerprint,
// sorted ascending, capacity-bounded.
class HallOfFame {
 public:
  explicit HallOfFame(size_t capacity) : capacity_(capacity) {}
  // True when a score this good could enter (cheap pre-filter).
  bool would_accept(const FitnessScore& s) const;
  // Entry must carry a fingerprint; keeps the better score per class.
  bool offer(Individual entry);
  const std::vector<Individual>& entries() const { return entries_; }
  const Individual* find(const std::string& fingerprint) const;

 private:
  size_t capacity_;
  std::vector<Individual> entries_;  // sorted by individual_less
};

Orbit random_orbit(const GAConfig& config, Xoshiro256ss& rng);

// Deterministic head/tail splice at floor(L/2) of the tails.
std::pair<Orbit, Orbit> crossover(const Orbit& o1, const Orbit& o2,
                                  Xoshiro256ss& rng);
// Uniform permutation of the concatenated tails, then an even split.
std::pair<Orbit, Orbit> permutation_mix(const Orbit& o1, const Orbit& o2,
                                        Xoshiro256ss& rng);
Orbit mutate(Orbit orbit, const GAConfig& config, Xoshiro256ss& rng);

// One elitist generation: rank, keep ceil(survival * population) unchanged,
// refill from recombined + mutated survivor pairs, score the children.
// Returns the number of fitness evaluations spent.
size_t step_generation(std::vector<Individual>& pop, const GAConfig& config,
                       Xoshiro256ss& rng, const FitnessOptions& options,
                       int threads);

struct GenerationStat {
  int generation = 0;  // 0 is the scored initial population
  Orbit best_orbit;
  FitnessScore best_score;
  size_t evaluations = 0;  // cumulative fitness evaluations so far
};

struct RunReport {
  std::vector<GenerationStat> history;
  std::vector<Individual> hall;  // re-scored at full precision, fingerprinted
  size_t evaluations = 0;
  int generations_run = 0;
  bool target_reached = false;
  unsigned long long seed = 0;
  std::string rng_name;
  double wall_seconds = 0;  // reporting only; never serialized to run files
};

struct RunOptions {
  int threads = 1;
  size_t hall_capacity = 16;
  // Called after each recorded generation (including generation 0).
  std::function<void(const GenerationStat&)> on_generation;
};

RunReport run(const GAConfig& config, const RunOptions& options = {});

// Best-so-far series from scoring population * generations uniformly random
// orbits under the same target and interior scoring profile as run().
struct BaselinePoint {
  size_t evaluations = 0;
  FitnessScore best;
};
std::vector<BaselinePoint> random_baseline(const GAConfig& config,
                                           int threads = 1);

const char* mixing_name(GAConfig::Mixing m);
const char* mutation_name(GAConfig::Mutation m);
std::optional<GAConfig::Mixing> mixing_from_name(const std::string& s);
std::optional<GAConfig::Mutation> mutation_from_name(const std::string& s);

}  // namespace dynforge
