#include "dynforge/verify.hpp"

#include <sstream>

#include "dynforge/invariants.hpp"

namespace dynforge {

namespace {

nlohmann::json point_json(const ProjPoint& p) { return p.str(); }

nlohmann::json classification_json(const OrbitClassification& c) {
  nlohmann::json j;
  j["status"] = c.preperiodic() ? "preperiodic" : "wandering";
  if (c.preperiodic()) {
    j["tail_m"] = c.tail_m;
    j["period_n"] = c.period_n;
  }
  return j;
}

nlohmann::json census_json(const CensusResult& census) {
  nlohmann::json j;
  j["count"] = census.count;
  j["complete"] = census.complete;
  j["max_tail"] = census.max_tail;
  j["max_cycle"] = census.max_cycle;
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : census.points) pts.push_back(point_json(p));
  j["points"] = std::move(pts);
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [p, q] : census.edges) {
    edges.push_back({point_json(p), point_json(q)});
  }
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace

nlohmann::json verify_orbit_report(const VerifyRequest& req) {
  nlohmann::json j;
  j["schema"] = 1;
  j["degree"] = req.orbit.degree;
  j["map_type"] = flavor_name(req.orbit.flavor);
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : req.orbit.entries) entries.push_back(to_string(e));
  j["orbit"] = std::move(entries);
  j["target"] = target_name(req.target);

  if (auto rejection = validate_orbit(req.orbit)) {
    j["error"] = {{"code", Error::code_name(rejection->code)},
                  {"message", rejection->detail}};
    return j;
  }
  std::optional<DynSystem> maybe_f;
  try {
    maybe_f = orbit_to_map(req.orbit);
  } catch (const Error& e) {
    j["error"] = {{"code", e.code_name()}, {"message", e.what()}};
    return j;
  }
  const DynSystem& f = *maybe_f;

  j["map"] = f.to_json();
  j["map"]["display"] = f.display();

  // The interpolated map must walk the orbit it came from.
  bool reproduced = true;
  {
    ProjPoint cur;  // (0 : 1)
    for (size_t i = 0; i + 1 < req.orbit.entries.size() && reproduced; ++i) {
      cur = f.evaluate(cur);
      reproduced = cur == ProjPoint::from_integer(req.orbit.entries[i + 1]);
    }
  }
  j["orbit_reproduced"] = reproduced;

  const GapConstant gap = height_gap_constant(f);
  const OrbitClassification cls =
      classify_orbit(f, ProjPoint(), req.options.classify_cap, &gap);
  j["classification"] = classification_json(cls);

  const std::vector<Rational> sigma = sigma_invariants(f);
  nlohmann::json sig = nlohmann::json::array();
  for (const auto& s : sigma) sig.push_back(to_string(s));
  j["sigma"] = std::move(sig);
  j["moduli_height"] = moduli_height(sigma);
  j["fingerprint"] = conjugacy_fingerprint(sigma);

  HeightValue hhat{0.0, 0.0};
  if (!cls.preperiodic()) {
    hhat = canonical_height_adaptive(f, ProjPoint(), req.options.height, &gap);
  }
  j["hhat0"] = {{"value", hhat.value}, {"error_bound", hhat.error_bound}};

  if (req.target == FitnessTarget::Preperiodic) {
    j["census"] = census_json(preperiodic_census(f, req.options.census));
  }

  FitnessScore score = evaluate_fitness(req.orbit, req.target, req.options);
  j["score"] = {{"value", score.value_json()}, {"detail", score.detail}};
  j["dynamical_compression"] = detect_dynamical_compression(req.orbit);
  return j;
}

nlohmann::json census_report(const DynSystem& f, const CensusParams& params) {
  nlohmann::json j;
  j["schema"] = 1;
  j["map"] = f.to_json();
  j["map"]["display"] = f.display();
  j["census"] = census_json(preperiodic_census(f, params));
  return j;
}

std::string orbit_entries_str(const std::vector<Integer>& entries) {
  std::ostringstream os;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ",";
    os << entries[i].get_str();
  }
  return os.str();
}

std::vector<Integer> parse_orbit_entries(const std::string& s) {
  std::vector<Integer> out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    // Trim spaces; mpz_class(str) throws std::invalid_argument on junk.
    size_t b = 0, e = token.size();
    while (b < e && std::isspace(static_cast<unsigned char>(token[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(token[e - 1])))
      --e;
    if (b == e) fail(Errc::ParseError, "empty orbit entry in '" + s + "'");
    try {
      out.emplace_back(token.substr(b, e - b));
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad orbit entry '" + token + "'");
    }
  }
  if (out.empty()) fail(Errc::ParseError, "empty orbit string");
  return out;
}

}  // namespace dynforge
