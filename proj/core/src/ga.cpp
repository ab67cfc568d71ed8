#include "dynforge/ga.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

namespace dynforge {

void GAConfig::validate() const {
  auto bad = [](const std::string& what) {
    fail(Errc::ParseError, "config validation: " + what);
  };
  if (degree < 2) bad("degree must be >= 2");
  if (population < 2) bad("population must be >= 2");
  if (generations < 0) bad("generations must be >= 0");
  if (!(survival > 0.0 && survival <= 1.0)) {
    bad("survival must be in (0, 1]");
  }
  if (!(reset_survival > 0.0 && reset_survival <= 1.0)) {
    bad("reset_survival must be in (0, 1]");
  }
  if (reset_interval < 0) bad("reset_interval must be >= 0");
  if (bound < 1) bad("bound must be >= 1");
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
    bad("mutation_rate must be in [0, 1]");
  }
  if (normalize_orbit && map_type == MapFlavor::Polynomial &&
      2 * bound < degree) {
    // d distinct nonzero genes must fit in [-B, B].
    bad("bound too small for distinct polynomial source points");
  }
  if (orbit_weights) {
    if (orbit_weights->first < 0 || orbit_weights->second < 0) {
      bad("orbit_weights must be non-negative");
    }
  }
}

bool orbit_lex_less(const Orbit& a, const Orbit& b) {
  return std::lexicographical_compare(
      a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
      [](const Integer& x, const Integer& y) { return x < y; });
}

bool individual_less(const Individual& a, const Individual& b) {
  if (a.score < b.score) return true;
  if (b.score < a.score) return false;
  return orbit_lex_less(a.orbit, b.orbit);
}

bool HallOfFame::would_accept(const FitnessScore& s) const {
  if (entries_.size() < capacity_) return true;
  return s < entries_.back().score;
}

const Individual* HallOfFame::find(const std::string& fingerprint) const {
  for (const auto& e : entries_) {
    if (e.fingerprint && *e.fingerprint == fingerprint) return &e;
  }
  return nullptr;
}

bool HallOfFame::offer(Individual entry) {
  if (!entry.fingerprint) {
    fail(Errc::Internal, "hall of fame entry without fingerprint");
  }
  if (capacity_ == 0) return false;
  for (auto it = entries_.begin(); it != entries_.end(); ++it) {
    if (it->fingerprint == entry.fingerprint) {
      if (individual_less(entry, *it)) {
        entries_.erase(it);
        break;  // replace with the better representative
      }
      return false;
    }
  }
  if (entries_.size() >= capacity_ &&
      !individual_less(entry, entries_.back())) {
    return false;  // full, and not better than the current worst
  }
  auto pos = std::lower_bound(entries_.begin(), entries_.end(), entry,
                              individual_less);
  entries_.insert(pos, std::move(entry));
  if (entries_.size() > capacity_) entries_.pop_back();
  return true;
}

Orbit random_orbit(const GAConfig& config, Xoshiro256ss& rng) {
  Orbit o;
  o.flavor = config.map_type;
  o.degree = config.degree;
  const size_t len = Orbit::expected_length(o.flavor, o.degree);
  o.entries.assign(len, Integer(0));
  const bool need_distinct =
      config.normalize_orbit && o.flavor == MapFlavor::Polynomial;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (size_t i = 1; i < len; ++i) {
      o.entries[i] = Integer(rng.uniform_int(-config.bound, config.bound));
    }
    if (!need_distinct) return o;
    // Interpolation sources are entries 0..degree; entry 0 is pinned to 0.
    bool distinct = true;
    for (size_t i = 0; i <= static_cast<size_t>(o.degree) && distinct; ++i) {
      for (size_t j = i + 1; j <= static_cast<size_t>(o.degree); ++j) {
        if (o.entries[i] == o.entries[j]) {
          distinct = false;
          break;
        }
      }
    }
    if (distinct) return o;
  }
  fail(Errc::Internal, "random_orbit failed to find distinct source points");
}

std::pair<Orbit, Orbit> crossover(const Orbit& o1, const Orbit& o2,
                                  Xoshiro256ss&) {
  const size_t tail = o1.tail_size();
  const size_t split = tail / 2;
  Orbit c1 = o1, c2 = o2;
  for (size_t i = 1 + split; i < o1.entries.size(); ++i) {
    c1.entries[i] = o2.entries[i];
    c2.entries[i] = o1.entries[i];
  }
  return {std::move(c1), std::move(c2)};
}

std::pair<Orbit, Orbit> permutation_mix(const Orbit& o1, const Orbit& o2,
                                        Xoshiro256ss& rng) {
  const size_t tail = o1.tail_size();
  std::vector<Integer> pool;
  pool.reserve(2 * tail);
  pool.insert(pool.end(), o1.entries.begin() + 1, o1.entries.end());
  pool.insert(pool.end(), o2.entries.begin() + 1, o2.entries.end());
  for (size_t i = pool.size(); i-- > 1;) {
    const size_t j = rng.uniform_below(i + 1);
    std::swap(pool[i], pool[j]);
  }
  Orbit c1 = o1, c2 = o2;
  for (size_t i = 0; i < tail; ++i) {
    c1.entries[i + 1] = pool[i];
    c2.entries[i + 1] = pool[tail + i];
  }
  return {std::move(c1), std::move(c2)};
}

Orbit mutate(Orbit orbit, const GAConfig& config, Xoshiro256ss& rng) {
  const size_t len = orbit.entries.size();
  if (config.mutation_method == GAConfig::Mutation::All) {
    for (size_t i = 1; i < len; ++i) {
      if (rng.bernoulli(config.mutation_rate)) {
        orbit.entries[i] = Integer(rng.uniform_int(-config.bound, config.bound));
      }
    }
  } else if (rng.bernoulli(config.mutation_rate)) {
    const size_t i = 1 + rng.uniform_below(len - 1);
    orbit.entries[i] = Integer(rng.uniform_int(-config.bound, config.bound));
  }
  return orbit;
}

namespace {

std::vector<FitnessScore> evaluate_all(const std::vector<Orbit>& orbits,
                                       FitnessTarget target,
                                       const FitnessOptions& options,
                                       int threads) {
  std::vector<FitnessScore> scores(orbits.size());
  if (threads <= 1 || orbits.size() <= 1) {
    for (size_t i = 0; i < orbits.size(); ++i) {
      scores[i] = evaluate_fitness(orbits[i], target, options);
    }
    return scores;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= orbits.size()) return;
      scores[i] = evaluate_fitness(orbits[i], target, options);
    }
  };
  std::vector<std::thread> pool;
  const int n = std::min<int>(threads, static_cast<int>(orbits.size()));
  pool.reserve(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return scores;
}

size_t survivor_count(double fraction, size_t population) {
  auto k = static_cast<size_t>(
      std::ceil(fraction * static_cast<double>(population)));
  return std::clamp<size_t>(k, 1, population);
}

FitnessOptions interior_options(const GAConfig& config) {
  FitnessOptions o = FitnessOptions::search_profile();
  o.weights = config.orbit_weights;
  return o;
}

FitnessOptions finalist_options(const GAConfig& config) {
  FitnessOptions o;
  o.weights = config.orbit_weights;
  return o;
}

}  // namespace

size_t step_generation(std::vector<Individual>& pop, const GAConfig& config,
                       Xoshiro256ss& rng, const FitnessOptions& options,
                       int threads) {
  std::sort(pop.begin(), pop.end(), individual_less);
  const size_t n_surv = survivor_count(config.survival, pop.size());
  const size_t n_children = pop.size() - n_surv;

  std::vector<Orbit> children;
  children.reserve(n_children);
  while (children.size() < n_children) {
    const size_t i = rng.uniform_below(n_surv);
    const size_t j = rng.uniform_below(n_surv);
    auto pair = config.mixing_method == GAConfig::Mixing::Crossover
                    ? crossover(pop[i].orbit, pop[j].orbit, rng)
                    : permutation_mix(pop[i].orbit, pop[j].orbit, rng);
    children.push_back(mutate(std::move(pair.first), config, rng));
    if (children.size() < n_children) {
      children.push_back(mutate(std::move(pair.second), config, rng));
    }
  }

  auto scores = evaluate_all(children, config.target, options, threads);
  pop.resize(n_surv);
  for (size_t i = 0; i < children.size(); ++i) {
    pop.push_back({std::move(children[i]), std::move(scores[i]), {}});
  }
  return children.size();
}

RunReport run(const GAConfig& config, const RunOptions& options) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();

  RunReport report;
  report.seed = config.seed;
  report.rng_name = Xoshiro256ss::name;

  Xoshiro256ss rng(config.seed);
  const FitnessOptions interior = interior_options(config);
  const FitnessOptions finalist = finalist_options(config);
  HallOfFame hall(options.hall_capacity);

  // Full-precision re-score + fingerprint before a candidate enters the
  // archive; interior scores are ranking-grade only.
  auto offer_finalist = [&](const Individual& ind) {
    if (ind.score.worst || !hall.would_accept(ind.score)) return;
    try {
      const DynSystem f = orbit_to_map(ind.orbit);
      std::string fp = conjugacy_fingerprint(f);
      if (const Individual* held = hall.find(fp)) {
        // Same class already archived with a score at least this good.
        if (!(ind.score < held->score)) return;
      }
      FitnessScore full = evaluate_fitness(ind.orbit, config.target, finalist);
      report.evaluations += 1;
      hall.offer({ind.orbit, std::move(full), std::move(fp)});
    } catch (const Error&) {
      // Degenerate finalist (should have scored WORST); skip.
    }
  };

  auto record_generation = [&](int g, std::vector<Individual>& pop) {
    std::sort(pop.begin(), pop.end(), individual_less);
    // Ascending offers let the archive's cutoff tighten monotonically: the
    // first rejection ends the scan.
    for (const auto& ind : pop) {
      if (ind.score.worst || !hall.would_accept(ind.score)) break;
      offer_finalist(ind);
    }
    GenerationStat stat{g, pop.front().orbit, pop.front().score,
                        report.evaluations};
    if (options.on_generation) options.on_generation(stat);
    report.history.push_back(std::move(stat));
    return pop.front().score;
  };

  auto reached = [&](const FitnessScore& s) {
    return config.orbit_target && !s.worst && s.value <= *config.orbit_target;
  };

  std::vector<Orbit> initial;
  initial.reserve(static_cast<size_t>(config.population));
  for (int i = 0; i < config.population; ++i) {
    initial.push_back(random_orbit(config, rng));
  }
  auto scores =
      evaluate_all(initial, config.target, interior, options.threads);
  report.evaluations += initial.size();

  std::vector<Individual> pop;
  pop.reserve(initial.size());
  for (size_t i = 0; i < initial.size(); ++i) {
    pop.push_back({std::move(initial[i]), std::move(scores[i]), {}});
  }

  FitnessScore best = record_generation(0, pop);
  if (reached(best)) {
    report.target_reached = true;
  } else {
    for (int g = 1; g <= config.generations; ++g) {
      report.evaluations +=
          step_generation(pop, config, rng, interior, options.threads);
      best = record_generation(g, pop);
      report.generations_run = g;
      if (reached(best)) {
        report.target_reached = true;
        break;
      }
      if (config.reset_interval > 0 && g % config.reset_interval == 0 &&
          g < config.generations) {
        std::sort(pop.begin(), pop.end(), individual_less);
        const size_t keep = survivor_count(config.reset_survival, pop.size());
        std::vector<Orbit> fresh;
        fresh.reserve(pop.size() - keep);
        for (size_t i = keep; i < pop.size(); ++i) {
          fresh.push_back(random_orbit(config, rng));
        }
        auto fresh_scores =
            evaluate_all(fresh, config.target, interior, options.threads);
        report.evaluations += fresh.size();
        pop.resize(keep);
        for (size_t i = 0; i < fresh.size(); ++i) {
          pop.push_back({std::move(fresh[i]), std::move(fresh_scores[i]), {}});
        }
      }
    }
  }

  report.hall = hall.entries();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

std::vector<BaselinePoint> random_baseline(const GAConfig& config,
                                           int threads) {
  config.validate();
  Xoshiro256ss rng(config.seed);
  const FitnessOptions options = interior_options(config);
  const size_t budget = static_cast<size_t>(config.population) *
                        static_cast<size_t>(config.generations);
  std::vector<BaselinePoint> series;
  std::optional<FitnessScore> best;
  size_t done = 0;
  while (done < budget) {
    const size_t batch =
        std::min<size_t>(static_cast<size_t>(config.population),
                         budget - done);
    std::vector<Orbit> orbits;
    orbits.reserve(batch);
    for (size_t i = 0; i < batch; ++i) {
      orbits.push_back(random_orbit(config, rng));
    }
    auto scores = evaluate_all(orbits, config.target, options, threads);
    for (size_t i = 0; i < batch; ++i) {
      if (!best || scores[i] < *best) {
        best = scores[i];
        series.push_back({done + i + 1, scores[i]});
      }
    }
    done += batch;
  }
  if (best && (series.empty() || series.back().evaluations != budget)) {
    series.push_back({budget, *best});
  }
  return series;
}

const char* mixing_name(GAConfig::Mixing m) {
  return m == GAConfig::Mixing::Crossover ? "crossover" : "permutation";
}

const char* mutation_name(GAConfig::Mutation m) {
  return m == GAConfig::Mutation::All ? "all" : "single";
}

std::optional<GAConfig::Mixing> mixing_from_name(const std::string& s) {
  if (s == "crossover") return GAConfig::Mixing::Crossover;
  if (s == "permutation") return GAConfig::Mixing::Permutation;
  return std::nullopt;
}

std::optional<GAConfig::Mutation> mutation_from_name(const std::string& s) {
  if (s == "all") return GAConfig::Mutation::All;
  if (s == "single") return GAConfig::Mutation::Single;
  return std::nullopt;
}

}  // namespace dynforge
