#include "dynforge/orbit.hpp"

#include <set>
#include <sstream>

#include "dynforge/linalg.hpp"

namespace dynforge {

const char* flavor_name(MapFlavor f) {
  return f == MapFlavor::Polynomial ? "polynomial" : "rational";
}

std::optional<MapFlavor> flavor_from_name(const std::string& s) {
  if (s == "polynomial" || s == "poly") return MapFlavor::Polynomial;
  if (s == "rational") return MapFlavor::Rational;
  return std::nullopt;
}

std::string Orbit::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << entries[i].get_str();
  }
  os << "]";
  return os.str();
}

std::optional<OrbitRejection> validate_orbit(const Orbit& orbit) {
  const size_t want = Orbit::expected_length(orbit.flavor, orbit.degree);
  if (orbit.degree < 2) {
    return OrbitRejection{Errc::DegenerateDegree, "degree must be >= 2"};
  }
  if (orbit.entries.size() != want) {
    std::ostringstream os;
    os << "expected " << want << " entries for " << flavor_name(orbit.flavor)
       << " degree " << orbit.degree << ", got " << orbit.entries.size();
    return OrbitRejection{Errc::WrongLength, os.str()};
  }
  if (orbit.entries[0] != 0) {
    return OrbitRejection{Errc::LeadingEntryNonzero,
                          "orbit must start at 0, got " +
                              orbit.entries[0].get_str()};
  }
  if (orbit.flavor == MapFlavor::Polynomial) {
    // Source points (all but the last entry) feed a Lagrange interpolation
    // and must be pairwise distinct.
    std::set<Integer> seen;
    for (size_t i = 0; i + 1 < orbit.entries.size(); ++i) {
      if (!seen.insert(orbit.entries[i]).second) {
        return OrbitRejection{Errc::DuplicateSourcePoint,
                              "duplicate source point " +
                                  orbit.entries[i].get_str()};
      }
    }
  }
  return std::nullopt;
}

DynSystem orbit_to_map_polynomial(int degree,
                                  const std::vector<Integer>& entries) {
  Orbit orbit{MapFlavor::Polynomial, degree, entries};
  if (auto rej = validate_orbit(orbit)) fail(rej->code, rej->detail);
  const size_t n = static_cast<size_t>(degree) + 1;  // unknown coefficients
  IntMat a(n, n);
  std::vector<Integer> rhs(n);
  for (size_t i = 0; i < n; ++i) {
    Integer pw = 1;
    for (size_t j = 0; j < n; ++j) {
      a.at(i, j) = pw;
      pw *= entries[i];
    }
    rhs[i] = entries[i + 1];
  }
  auto sol = solve_square(a, rhs);
  if (!sol) {
    // Unreachable for distinct sources (Vandermonde), kept as a structured
    // failure rather than an assert.
    fail(Errc::InconsistentSystem, "interpolation system is singular");
  }
  if ((*sol)[n - 1] == 0) {
    fail(Errc::DegenerateDegree,
         "interpolant has degree below " + std::to_string(degree));
  }
  return DynSystem::from_rational_coeffs(degree, *sol, {Rational(1)});
}

DynSystem orbit_to_map_rational(int degree,
                                const std::vector<Integer>& entries) {
  Orbit orbit{MapFlavor::Rational, degree, entries};
  if (auto rej = validate_orbit(orbit)) fail(rej->code, rej->detail);
  const size_t unknowns = 2 * (static_cast<size_t>(degree) + 1);
  const size_t rows = entries.size() - 1;  // 2d + 1 equations
  // F0(z_i) - z_{i+1} * F1(z_i) = 0 for consecutive entries.
  IntMat a(rows, unknowns);
  for (size_t i = 0; i < rows; ++i) {
    Integer pw = 1;
    for (size_t j = 0; j <= static_cast<size_t>(degree); ++j) {
      a.at(i, j) = pw;
      a.at(i, static_cast<size_t>(degree) + 1 + j) = -entries[i + 1] * pw;
      pw *= entries[i];
    }
  }
  std::vector<Integer> kernel;
  size_t nullity = kernel_dimension(a, &kernel);
  if (nullity != 1) {
    fail(Errc::KernelDimensionNotOne,
         "kernel dimension " + std::to_string(nullity) + ", need 1");
  }
  std::vector<Integer> f0(kernel.begin(),
                          kernel.begin() + static_cast<long>(degree) + 1);
  std::vector<Integer> f1(kernel.begin() + static_cast<long>(degree) + 1,
                          kernel.end());
  // DynSystem construction rejects vanishing resultant (shared factor or
  // degree drop) as DegenerateMap.
  return DynSystem(degree, std::move(f0), std::move(f1));
}

DynSystem orbit_to_map(const Orbit& orbit) {
  std::vector<Integer> e = orbit.entries;
  return orbit.flavor == MapFlavor::Polynomial
             ? orbit_to_map_polynomial(orbit.degree, e)
             : orbit_to_map_rational(orbit.degree, e);
}

}  // namespace dynforge
