#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "dynforge/config.hpp"
#include "dynforge/verify.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitMismatch = 3;

using dynforge::Errc;
using dynforge::Error;

dynforge::Orbit make_orbit(int degree, const std::string& map_type,
                           const std::string& orbit_str) {
  auto flavor = dynforge::flavor_from_name(map_type);
  if (!flavor) {
    dynforge::fail(Errc::ParseError, "unknown map type '" + map_type + "'");
  }
  dynforge::Orbit orbit;
  orbit.flavor = *flavor;
  orbit.degree = degree;
  orbit.entries = dynforge::parse_orbit_entries(orbit_str);
  return orbit;
}

struct SearchArgs {
  std::string config_path;
  std::optional<unsigned long long> seed;
  int threads = 1;
  std::string out_path;
};

int cmd_search(const SearchArgs& args) {
  dynforge::GAConfig config = dynforge::parse_config(args.config_path);
  if (args.seed) config.seed = *args.seed;
  config.validate();

  std::ofstream out(args.out_path);
  if (!out) {
    std::cerr << "error: cannot open output file: " << args.out_path << "\n";
    return kExitFailure;
  }

  nlohmann::json header{{"schema", 1},
                        {"type", "config"},
                        {"config", dynforge::config_to_json(config)},
                        {"rng", dynforge::Xoshiro256ss::name}};
  out << header.dump() << "\n" << std::flush;

  dynforge::RunOptions opts;
  opts.threads = args.threads;
  opts.on_generation = [&out](const dynforge::GenerationStat& stat) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : stat.best_orbit.entries) {
      entries.push_back(dynforge::to_string(e));
    }
    nlohmann::json rec{{"schema", 1},
                       {"type", "generation"},
                       {"generation", stat.generation},
                       {"evaluations", stat.evaluations},
                       {"best",
                        {{"orbit", std::move(entries)},
                         {"score", stat.best_score.value_json()},
                         {"detail", stat.best_score.detail}}}};
    out << rec.dump() << "\n" << std::flush;
  };

  dynforge::RunReport report = dynforge::run(config, opts);

  nlohmann::json hall = nlohmann::json::array();
  for (const auto& ind : report.hall) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : ind.orbit.entries) {
      entries.push_back(dynforge::to_string(e));
    }
    nlohmann::json rec{{"orbit", std::move(entries)},
                       {"score", ind.score.value_json()},
                       {"detail", ind.score.detail},
                       {"dynamical_compression",
                        dynforge::detect_dynamical_compression(ind.orbit)}};
    if (ind.fingerprint) rec["fingerprint"] = *ind.fingerprint;
    try {
      rec["map"] = dynforge::orbit_to_map(ind.orbit).display();
    } catch (const Error&) {
      // Hall entries always interpolate; defensive only.
    }
    hall.push_back(std::move(rec));
  }
  out << nlohmann::json{{"schema", 1},
                        {"type", "hall_of_fame"},
                        {"entries", std::move(hall)}}
             .dump()
      << "\n";
  out << nlohmann::json{
             {"schema", 1},
             {"type", "summary"},
             {"evaluations", report.evaluations},
             {"generations_run", report.generations_run},
             {"status",
              report.target_reached ? "target_reached" : "completed"}}
             .dump()
      << "\n";

  std::cerr << "search finished: " << report.evaluations << " evaluations in "
            << report.wall_seconds << "s";
  if (!report.history.empty()) {
    const auto& last = report.history.back();
    std::cerr << ", best score "
              << last.best_score.value_json().dump() << " at generation "
              << last.generation;
  }
  std::cerr << "\n";
  return kExitSuccess;
}

struct VerifyArgs {
  int degree = 2;
  std::string map_type;
  std::string orbit;
  std::string target = "height_ratio";
  std::optional<std::string> expect_map;
  std::optional<std::string> expect_value;  // number or "WORST"
  double tol = 0.0;
  std::optional<long> expect_count;
  std::optional<int> expect_tail;
  std::optional<int> expect_cycle;
};

int cmd_verify_orbit(const VerifyArgs& args) {
  dynforge::VerifyRequest req;
  req.orbit = make_orbit(args.degree, args.map_type, args.orbit);
  auto target = dynforge::target_from_name(args.target);
  if (!target) {
    dynforge::fail(Errc::ParseError, "unknown target '" + args.target + "'");
  }
  req.target = *target;

  nlohmann::json report = dynforge::verify_orbit_report(req);
  std::cout << report.dump(2) << "\n";
  if (report.contains("error")) return kExitFailure;

  std::vector<std::string> mismatches;
  if (!report["orbit_reproduced"].get<bool>()) {
    mismatches.push_back("interpolated map does not reproduce the orbit");
  }
  if (args.expect_map) {
    const std::string got = report["map"]["display"].get<std::string>();
    if (got != *args.expect_map) {
      mismatches.push_back("map: got '" + got + "', want '" +
                           *args.expect_map + "'");
    }
  }
  if (args.expect_value) {
    const nlohmann::json& v = report["score"]["value"];
    if (*args.expect_value == "WORST") {
      if (!v.is_string()) {
        mismatches.push_back("score: got " + v.dump() + ", want WORST");
      }
    } else if (!v.is_number()) {
      mismatches.push_back("score: got " + v.dump() + ", want " +
                           *args.expect_value);
    } else {
      const double want = std::stod(*args.expect_value);
      const double got = v.get<double>();
      if (!(std::abs(got - want) <= args.tol)) {
        mismatches.push_back("score: got " + std::to_string(got) + ", want " +
                             *args.expect_value + " +/- " +
                             std::to_string(args.tol));
      }
    }
  }
  if (args.expect_count) {
    if (!report.contains("census")) {
      mismatches.push_back("count expected but census not computed "
                           "(use --target preperiodic)");
    } else if (report["census"]["count"].get<long>() != *args.expect_count) {
      mismatches.push_back(
          "census count: got " + report["census"]["count"].dump() + ", want " +
          std::to_string(*args.expect_count));
    }
  }
  // Preperiodic rows print the census-wide (max tail, max cycle); the other
  // targets print the classification of 0.
  auto structural = [&](const char* census_key, const char* class_key,
                        int want, const char* label) {
    int got = 0;
    if (req.target == dynforge::FitnessTarget::Preperiodic) {
      got = report["census"][census_key].get<int>();
    } else if (report["classification"].contains(class_key)) {
      got = report["classification"][class_key].get<int>();
    } else {
      mismatches.push_back(std::string(label) + ": orbit is wandering");
      return;
    }
    if (got != want) {
      mismatches.push_back(std::string(label) + ": got " +
                           std::to_string(got) + ", want " +
                           std::to_string(want));
    }
  };
  if (args.expect_tail) {
    structural("max_tail", "tail_m", *args.expect_tail, "tail");
  }
  if (args.expect_cycle) {
    structural("max_cycle", "period_n", *args.expect_cycle, "cycle");
  }

  for (const auto& m : mismatches) std::cerr << "mismatch: " << m << "\n";
  return mismatches.empty() ? kExitSuccess : kExitMismatch;
}

struct CensusArgs {
  int degree = 2;
  std::string map_type = "polynomial";
  std::string orbit;
  std::string num;
  std::string den;
  long h_scan = 100;
  int n_max = 0;
};

int cmd_census(const CensusArgs& args) {
  dynforge::CensusParams params;
  params.h_scan = args.h_scan;
  params.n_max = args.n_max;

  std::optional<dynforge::DynSystem> f;
  if (!args.orbit.empty()) {
    f = dynforge::orbit_to_map(
        make_orbit(args.degree, args.map_type, args.orbit));
  } else if (!args.num.empty() && !args.den.empty()) {
    f = dynforge::DynSystem(args.degree,
                            dynforge::parse_orbit_entries(args.num),
                            dynforge::parse_orbit_entries(args.den));
  } else {
    dynforge::fail(Errc::ParseError,
                   "census needs --orbit or both --num and --den");
  }
  std::cout << dynforge::census_report(*f, params).dump(2) << "\n";
  return kExitSuccess;
}

struct BaselineArgs {
  std::string config_path;
  std::optional<unsigned long long> seed;
  int threads = 1;
  std::string out_path;
};

std::string csv_value(const dynforge::FitnessScore& s) {
  if (s.worst) return "WORST";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", s.value);
  return buf;
}

int cmd_baseline(const BaselineArgs& args) {
  dynforge::GAConfig config = dynforge::parse_config(args.config_path);
  if (args.seed) config.seed = *args.seed;
  config.validate();

  std::ofstream out(args.out_path);
  if (!out) {
    std::cerr << "error: cannot open output file: " << args.out_path << "\n";
    return kExitFailure;
  }

  dynforge::RunOptions opts;
  opts.threads = args.threads;
  dynforge::RunReport ga = dynforge::run(config, opts);
  std::vector<dynforge::BaselinePoint> random =
      dynforge::random_baseline(config, args.threads);

  out << "evaluations,ga_best,random_best\n";
  dynforge::FitnessScore ga_best;
  ga_best.worst = true;
  size_t r = 0;
  dynforge::FitnessScore random_best;
  random_best.worst = true;
  for (const auto& stat : ga.history) {
    if (stat.best_score < ga_best) ga_best = stat.best_score;
    while (r < random.size() && random[r].evaluations <= stat.evaluations) {
      random_best = random[r].best;
      ++r;
    }
    out << stat.evaluations << "," << csv_value(ga_best) << ","
        << csv_value(random_best) << "\n";
  }
  std::cerr << "baseline finished: GA " << ga.evaluations
            << " evaluations (best " << csv_value(ga_best) << "), random "
            << (random.empty() ? std::string("WORST")
                               : csv_value(random.back().best))
            << "\n";
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynforge — genetic search for extreme arithmetic-dynamical "
               "systems over Q"};
  app.require_subcommand(1);

  SearchArgs search;
  auto* s = app.add_subcommand("search", "Run the genetic search");
  s->add_option("--config", search.config_path, "Config file (key = value)")
      ->required();
  s->add_option("--seed", search.seed, "Override the config seed");
  s->add_option("--threads", search.threads, "Fitness evaluation threads")
      ->default_val(1);
  s->add_option("--out", search.out_path, "Output JSONL path")->required();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify-orbit",
                               "Interpolate an orbit and verify its data");
  v->add_option("--degree", verify.degree, "Map degree")->required();
  v->add_option("--map-type", verify.map_type, "poly|polynomial|rational")
      ->required();
  v->add_option("--orbit", verify.orbit, "Comma-separated orbit, e.g. "
                                         "\"0,-2,1,-3\"")
      ->required();
  v->add_option("--target", verify.target,
                "height_ratio|preperiodic|cycle|tail")
      ->default_val("height_ratio");
  v->add_option("--expect-map", verify.expect_map,
                "Expected dehomogenized map display (exact)");
  v->add_option("--expect-value", verify.expect_value,
                "Expected score value (number or WORST)");
  v->add_option("--tol", verify.tol, "Tolerance for --expect-value")
      ->default_val(0.0);
  v->add_option("--expect-count", verify.expect_count,
                "Expected census count (preperiodic target)");
  v->add_option("--expect-tail", verify.expect_tail, "Expected tail length");
  v->add_option("--expect-cycle", verify.expect_cycle,
                "Expected cycle length");

  CensusArgs census;
  auto* c = app.add_subcommand("census",
                               "Rational preperiodic census of a map");
  c->add_option("--degree", census.degree, "Map degree")->required();
  c->add_option("--map-type", census.map_type, "poly|polynomial|rational");
  c->add_option("--orbit", census.orbit, "Orbit to interpolate");
  c->add_option("--num", census.num,
                "Numerator coefficients, ascending (bypasses the orbit "
                "encoding)");
  c->add_option("--den", census.den, "Denominator coefficients, ascending");
  c->add_option("--h-scan", census.h_scan, "Seed-scan coordinate bound")
      ->default_val(100);
  c->add_option("--n-max", census.n_max,
                "Periodic search depth (0 = automatic)")
      ->default_val(0);

  BaselineArgs baseline;
  auto* b = app.add_subcommand(
      "baseline", "GA vs uniform-random comparison at equal budget (CSV)");
  b->add_option("--config", baseline.config_path, "Config file")->required();
  b->add_option("--seed", baseline.seed, "Override the config seed");
  b->add_option("--threads", baseline.threads, "Fitness evaluation threads")
      ->default_val(1);
  b->add_option("--out", baseline.out_path, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitConfig;
  }

  try {
    if (s->parsed()) return cmd_search(search);
    if (v->parsed()) return cmd_verify_orbit(verify);
    if (c->parsed()) return cmd_census(census);
    if (b->parsed()) return cmd_baseline(baseline);
  } catch (const Error& e) {
    std::cerr << "error [" << e.code_name() << "]: " << e.what() << "\n";
    return e.code() == Errc::ParseError ? kExitConfig : kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitConfig;
}
