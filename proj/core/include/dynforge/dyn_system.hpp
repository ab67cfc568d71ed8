#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "dynforge/poly.hpp"
#include "dynforge/projective.hpp"

namespace dynforge {

// Integer Möbius transformation z -> (a z + b) / (c z + d), det != 0.
struct Mobius {
  Integer a, b, c, d;
  Mobius(Integer a_, Integer b_, Integer c_, Integer d_);
  Integer det() const { return a * d - b * c; }
  // Adjugate: composing gives det * identity, i.e. the projective inverse.
  Mobius adjugate() const { return Mobius(d, -b, -c, a); }
};

// Degree-d morphism of P^1 over Q as a normalized pair of integer forms
// (F0 : F1). Coefficients are stored dehomogenized and ascending:
// numerator()[i] is the x^i y^(d-i) coefficient of F0. Canonical form:
// joint coefficient content 1, highest-power nonzero coefficient of F1
// positive. Construction rejects Res(F0, F1) = 0 (not a morphism /
// degenerate degree drop).
class DynSystem {
 public:
  DynSystem(int degree, std::vector<Integer> f0, std::vector<Integer> f1);
  static DynSystem from_rational_coeffs(int degree,
                                        const std::vector<Rational>& num,
                                        const std::vector<Rational>& den);

  int degree() const { return degree_; }
  bool is_polynomial() const { return polynomial_; }
  const std::vector<Integer>& numerator() const { return f0_; }
  const std::vector<Integer>& denominator() const { return f1_; }
  IntPoly numerator_poly() const { return IntPoly(f0_); }
  IntPoly denominator_poly() const { return IntPoly(f1_); }

  ProjPoint evaluate(const ProjPoint& p) const;
  // [P, f(P), ..., f^n(P)] — n + 1 points.
  std::vector<ProjPoint> iterate(const ProjPoint& p, int n) const;
  // Affine derivative f'(z) = (F0' F1 - F0 F1')/F1^2 at a non-pole z.
  Rational derivative_value(const Rational& z) const;

  Integer resultant() const;
  // h(F) = ln max |coefficient| over both forms.
  double coeff_height() const;

  // Dehomogenized display with rational coefficients, e.g.
  // "1/6*z^2 - 7/6*z - 2" or "(-3*z^2 - 29*z + 14)/(4*z + 14)".
  std::string display(const std::string& var = "z") const;

  nlohmann::json to_json() const;
  static DynSystem from_json(const nlohmann::json& j);

  bool operator==(const DynSystem& o) const = default;

 private:
  int degree_;
  std::vector<Integer> f0_, f1_;
  bool polynomial_;
};

// adj(M) . F . M, canonicalized. Projective conjugation: for det = ±1 this
// is exactly f conjugated by the Möbius map M.
DynSystem conjugate(const DynSystem& f, const Mobius& m);

}  // namespace dynforge
