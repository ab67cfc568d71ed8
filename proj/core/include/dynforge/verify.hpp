#pragma once

#include <json.hpp>

#include "dynforge/fitness.hpp"

namespace dynforge {

// One orbit, fully worked out: the interpolated map, classification of 0,
// sigma invariants / moduli height / fingerprint, canonical height of 0,
// the census when the target warrants it, the fitness score, and the
// dynamical-compression flag. This record is what `verify-orbit` prints and
// what the fixture suites compare against.
struct VerifyRequest {
  Orbit orbit;
  FitnessTarget target = FitnessTarget::HeightRatio;
  FitnessOptions options;  // full-precision profile by default
};

nlohmann::json verify_orbit_report(const VerifyRequest& req);

// Census-only record for a map given directly (not through an orbit).
nlohmann::json census_report(const DynSystem& f, const CensusParams& params);

// Orbit entries as a comma string and back ("0,-2,1,-3").
std::string orbit_entries_str(const std::vector<Integer>& entries);
std::vector<Integer> parse_orbit_entries(const std::string& s);

}  // namespace dynforge
