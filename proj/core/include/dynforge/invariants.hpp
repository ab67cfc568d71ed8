#pragma once

#include <string>
#include <vector>

#include "dynforge/dyn_system.hpp"

namespace dynforge {

// Fixed-point form Phi_f(z) = primitive part of F0(z) - z F1(z). Degree is
// d + 1 exactly when infinity is not fixed, lower otherwise.
IntPoly fixed_point_polynomial(const DynSystem& f);

// Elementary symmetric functions sigma_1 .. sigma_{d+1} of the d + 1
// fixed-point multipliers (with multiplicity), exact over Q. These are
// invariant under conjugation by Mobius maps, so they identify the
// conjugacy class of f. Computed by moving all fixed points away from
// infinity, then reading the characteristic polynomial of the multiplier
// spectrum off a resultant in the multiplier variable.
std::vector<Rational> sigma_invariants(const DynSystem& f);

// Moduli height h_M(f) = max_k h(sigma_k), with h(0) = 0.
double moduli_height(const std::vector<Rational>& sigma);
double moduli_height(const DynSystem& f);

// SHA-256 hex digest of the canonical JSON array of the sigma fraction
// strings; equal exactly when the sigma lists coincide.
std::string conjugacy_fingerprint(const std::vector<Rational>& sigma);
std::string conjugacy_fingerprint(const DynSystem& f);

}  // namespace dynforge
