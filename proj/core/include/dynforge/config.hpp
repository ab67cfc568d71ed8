#pragma once

#include <string>

#include "dynforge/ga.hpp"

namespace dynforge {

// Flat `key = value` search configuration with the canonical parameter names
// (map_type, degree, population, generations, survival, reset_survival,
// reset_interval, normalize_orbit, bound, mixing_method, mutation_rate,
// mutation_method, target, orbit_target, orbit_weights) plus `seed`.
// `params['key'] = value` spellings, quoted strings, True/False and (a,b)
// tuples are accepted, so a parameter block can be pasted as-is. Unknown
// keys raise ParseError naming the key; the parsed config is validated.
GAConfig parse_config_text(const std::string& text);
GAConfig parse_config(const std::string& path);

// The config as a JSON object (for run-report echoes).
nlohmann::json config_to_json(const GAConfig& config);

}  // namespace dynforge
