#include "dynforge/invariants.hpp"

#include <json.hpp>

#include <algorithm>

#include "dynforge/heights.hpp"
#include "dynforge/linalg.hpp"
#include "dynforge/sha256.hpp"

namespace dynforge {

IntPoly fixed_point_polynomial(const DynSystem& f) {
  IntPoly phi =
      f.numerator_poly() - f.denominator_poly().shifted(1);
  if (phi.is_zero()) {
    // F0 = z F1 cannot happen for a morphism (common factor), but guard.
    fail(Errc::Internal, "identity fixed-point form");
  }
  return phi.primitive_part();
}

std::vector<Rational> sigma_invariants(const DynSystem& f) {
  const int d = f.degree();

  // Conjugate by alpha : z -> t + 1/z where t is the smallest non-negative
  // integer that is not fixed; alpha sends infinity to t, so g = f^alpha has
  // no fixed point at infinity and all d + 1 multipliers sit at finite,
  // non-pole roots of Phi_g. A degree-d map has at most d + 1 fixed points,
  // so t <= d + 1.
  Integer t = 0;
  while (true) {
    ProjPoint pt = ProjPoint::from_integer(t);
    if (f.evaluate(pt) != pt) break;
    ++t;
    if (t > d + 2) fail(Errc::Internal, "no non-fixed integer found");
  }
  const DynSystem g = conjugate(f, Mobius(t, 1, 1, 0));

  const IntPoly g0 = g.numerator_poly();
  const IntPoly g1 = g.denominator_poly();
  const IntPoly phi = fixed_point_polynomial(g);
  if (phi.degree() != d + 1) {
    fail(Errc::Internal, "fixed point escaped to infinity after conjugation");
  }

  // N(z, w) = w G1(z)^2 - (G0' G1 - G0 G1'); at a fixed point z0 of g,
  // N(z0, w) = G1(z0)^2 (w - multiplier(z0)) and G1(z0) != 0. Hence
  // Res_z(Phi_g, N(., w)), taken at declared z-degrees (d+1, 2d), is a
  // w-polynomial with the multiplier spectrum as its root multiset, up to a
  // constant factor that monic normalization removes.
  const IntPoly n_lead = g1 * g1;
  const IntPoly n_const =
      g0.derivative() * g1 - g0 * g1.derivative();

  // Degree d+1 in w: evaluate at d+2 integer nodes and interpolate exactly.
  const int samples = d + 2;
  IntMat vand(samples, samples);
  std::vector<Integer> rhs(samples);
  for (int i = 0; i < samples; ++i) {
    Integer p = 1;
    for (int j = 0; j < samples; ++j) {
      vand.at(i, j) = p;
      p *= i;
    }
    const IntPoly n_at = n_lead * Integer(i) - n_const;
    rhs[i] = resultant_declared(phi, n_at, d + 1, 2 * d);
  }
  auto coeffs = solve_square(vand, rhs);
  if (!coeffs) fail(Errc::Internal, "Vandermonde solve failed");

  Rational lead = (*coeffs)[samples - 1];
  lead.canonicalize();
  if (lead == 0) fail(Errc::Internal, "multiplier polynomial degree drop");

  // Monic: prod (w - lambda_i) = sum_k (-1)^k e_k w^{d+1-k}.
  std::vector<Rational> sigma(d + 1);
  for (int k = 1; k <= d + 1; ++k) {
    Rational v = (*coeffs)[d + 1 - k] / lead;
    if (k % 2 == 1) v = -v;
    v.canonicalize();
    sigma[k - 1] = v;
  }
  return sigma;
}

double moduli_height(const std::vector<Rational>& sigma) {
  double best = 0.0;
  for (const auto& s : sigma) best = std::max(best, naive_height(s));
  return best;
}

double moduli_height(const DynSystem& f) {
  return moduli_height(sigma_invariants(f));
}

std::string conjugacy_fingerprint(const std::vector<Rational>& sigma) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : sigma) arr.push_back(to_string(s));
  return sha256_hex(arr.dump());
}

std::string conjugacy_fingerprint(const DynSystem& f) {
  return conjugacy_fingerprint(sigma_invariants(f));
}

}  // namespace dynforge
