#include "dynforge/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace dynforge {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string strip_quotes(const std::string& s) {
  if (s.size() >= 2 && ((s.front() == '\'' && s.back() == '\'') ||
                        (s.front() == '"' && s.back() == '"'))) {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

[[noreturn]] void bad_line(int line, const std::string& what) {
  fail(Errc::ParseError, "config line " + std::to_string(line) + ": " + what);
}

long parse_long(const std::string& v, int line, const std::string& key) {
  try {
    size_t idx = 0;
    long out = std::stol(v, &idx);
    if (idx != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    bad_line(line, "value '" + v + "' for '" + key + "' is not an integer");
  }
}

double parse_double(const std::string& v, int line, const std::string& key) {
  try {
    size_t idx = 0;
    double out = std::stod(v, &idx);
    if (idx != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    bad_line(line, "value '" + v + "' for '" + key + "' is not a number");
  }
}

bool parse_bool(const std::string& v, int line, const std::string& key) {
  if (v == "True" || v == "true" || v == "1") return true;
  if (v == "False" || v == "false" || v == "0") return false;
  bad_line(line, "value '" + v + "' for '" + key + "' is not a boolean");
}

std::pair<int, int> parse_pair(const std::string& v, int line,
                               const std::string& key) {
  std::string s = v;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    s = s.substr(1, s.size() - 2);
  }
  const size_t comma = s.find(',');
  if (comma == std::string::npos) {
    bad_line(line, "value '" + v + "' for '" + key + "' is not a pair");
  }
  return {static_cast<int>(parse_long(trim(s.substr(0, comma)), line, key)),
          static_cast<int>(parse_long(trim(s.substr(comma + 1)), line, key))};
}

// Accepts `key` or `params['key']`.
std::string normalize_key(std::string key, int line) {
  if (key.rfind("params[", 0) == 0 && key.back() == ']') {
    key = strip_quotes(trim(key.substr(7, key.size() - 8)));
  }
  if (key.empty()) bad_line(line, "empty key");
  return key;
}

}  // namespace

GAConfig parse_config_text(const std::string& text) {
  GAConfig config;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    const size_t eq = raw.find('=');
    if (eq == std::string::npos) bad_line(line, "expected 'key = value'");
    const std::string key = normalize_key(trim(raw.substr(0, eq)), line);
    const std::string value = strip_quotes(trim(raw.substr(eq + 1)));
    if (value.empty()) bad_line(line, "missing value for '" + key + "'");

    if (key == "map_type") {
      auto flavor = flavor_from_name(value);
      if (!flavor) bad_line(line, "unknown map_type '" + value + "'");
      config.map_type = *flavor;
    } else if (key == "degree") {
      config.degree = static_cast<int>(parse_long(value, line, key));
    } else if (key == "population") {
      config.population = static_cast<int>(parse_long(value, line, key));
    } else if (key == "generations") {
      config.generations = static_cast<int>(parse_long(value, line, key));
    } else if (key == "survival") {
      config.survival = parse_double(value, line, key);
    } else if (key == "reset_survival") {
      config.reset_survival = parse_double(value, line, key);
    } else if (key == "reset_interval") {
      config.reset_interval = static_cast<int>(parse_long(value, line, key));
    } else if (key == "normalize_orbit") {
      config.normalize_orbit = parse_bool(value, line, key);
    } else if (key == "bound") {
      config.bound = parse_long(value, line, key);
    } else if (key == "mixing_method") {
      auto mixing = mixing_from_name(value);
      if (!mixing) bad_line(line, "unknown mixing_method '" + value + "'");
      config.mixing_method = *mixing;
    } else if (key == "mutation_rate") {
      config.mutation_rate = parse_double(value, line, key);
    } else if (key == "mutation_method") {
      auto mutation = mutation_from_name(value);
      if (!mutation) bad_line(line, "unknown mutation_method '" + value + "'");
      config.mutation_method = *mutation;
    } else if (key == "target") {
      auto target = target_from_name(value);
      if (!target) bad_line(line, "unknown target '" + value + "'");
      config.target = *target;
    } else if (key == "orbit_target") {
      config.orbit_target = parse_double(value, line, key);
    } else if (key == "orbit_weights") {
      config.orbit_weights = parse_pair(value, line, key);
    } else if (key == "seed") {
      try {
        // stoull would wrap a negative sign around instead of rejecting it.
        if (!std::isdigit(static_cast<unsigned char>(value[0]))) {
          throw std::invalid_argument(value);
        }
        size_t idx = 0;
        config.seed = std::stoull(value, &idx);
        if (idx != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        bad_line(line, "value '" + value + "' for 'seed' is not an integer");
      }
    } else {
      bad_line(line, "unknown config key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

GAConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

nlohmann::json config_to_json(const GAConfig& c) {
  nlohmann::json j{
      {"map_type", flavor_name(c.map_type)},
      {"degree", c.degree},
      {"population", c.population},
      {"generations", c.generations},
      {"survival", c.survival},
      {"reset_survival", c.reset_survival},
      {"reset_interval", c.reset_interval},
      {"normalize_orbit", c.normalize_orbit},
      {"bound", c.bound},
      {"mixing_method", mixing_name(c.mixing_method)},
      {"mutation_rate", c.mutation_rate},
      {"mutation_method", mutation_name(c.mutation_method)},
      {"target", target_name(c.target)},
      {"seed", c.seed},
  };
  if (c.orbit_target) j["orbit_target"] = *c.orbit_target;
  if (c.orbit_weights) {
    j["orbit_weights"] = {c.orbit_weights->first, c.orbit_weights->second};
  }
  return j;
}

}  // namespace dynforge
