#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynforge/dyn_system.hpp"

namespace dynforge {

enum class MapFlavor { Polynomial, Rational };

const char* flavor_name(MapFlavor f);
std::optional<MapFlavor> flavor_from_name(const std::string& s);

// Genome of the search: the first degree+2 (polynomial) or 2*degree+2
// (rational) entries of an integer orbit of 0.
struct Orbit {
  MapFlavor flavor = MapFlavor::Polynomial;
  int degree = 2;
  std::vector<Integer> entries;  // entries[0] must be 0

  static size_t expected_length(MapFlavor flavor, int degree) {
    return flavor == MapFlavor::Polynomial
               ? static_cast<size_t>(degree) + 2
               : 2 * static_cast<size_t>(degree) + 2;
  }
  size_t tail_size() const { return entries.empty() ? 0 : entries.size() - 1; }
  std::string str() const;
};

struct OrbitRejection {
  Errc code;
  std::string detail;
};

// Shape and source-point validation; nullopt when the orbit is well-formed.
std::optional<OrbitRejection> validate_orbit(const Orbit& orbit);

// Exact interpolation of the unique degree-d map sending each orbit entry to
// its successor. Throws Error with the matching Errc on degenerate input
// (duplicate polynomial source point, degree drop, kernel dimension != 1,
// vanishing resultant).
DynSystem orbit_to_map_polynomial(int degree,
                                  const std::vector<Integer>& entries);
DynSystem orbit_to_map_rational(int degree, const std::vector<Integer>& entries);
DynSystem orbit_to_map(const Orbit& orbit);

}  // namespace dynforge
