#pragma once

#include <string>
#include <vector>

#include "dynforge/numeric.hpp"

namespace dynforge {

// Dense univariate polynomial over Z, coefficients ascending (coeffs_[i] is
// the z^i term). The zero polynomial has an empty coefficient vector and
// degree -1. Trailing (highest-index) zeros are always stripped.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly constant(Integer c);
  static IntPoly monomial(Integer c, size_t power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Integer& coeff(size_t i) const;  // 0 beyond the degree
  const Integer& lc() const;             // leading coefficient, nonzero poly
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  Integer eval(const Integer& z) const;
  Rational eval(const Rational& z) const;
  // Homogeneous evaluation with declared degree D >= degree():
  // sum coeff(i) * a^i * b^(D-i).
  Integer eval_homogeneous(size_t declared_degree, const Integer& a,
                           const Integer& b) const;

  IntPoly derivative() const;
  Integer content() const;          // gcd of coefficients, >= 0; 0 for zero
  IntPoly primitive_part() const;   // content 1, leading coefficient > 0
  double coeff_log_height() const;  // ln max |coeff|, 0 for the zero poly

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly&) const;
  IntPoly operator-(const IntPoly&) const;
  IntPoly operator*(const IntPoly&) const;
  IntPoly operator*(const Integer&) const;
  bool operator==(const IntPoly&) const = default;

  // p(z) * z^k
  IntPoly shifted(size_t k) const;

  std::string str(const std::string& var = "z") const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

// Resultant of p and q at their exact degrees (Sylvester determinant,
// fraction-free). Res of two constants is 1; Res(c, q) = c^deg(q).
Integer resultant(const IntPoly& p, const IntPoly& q);

// Resultant at declared degrees >= the exact degrees: the determinant of the
// (deg_p + deg_q)-square Sylvester matrix built from the padded coefficient
// sequences. This is the resultant of the binary forms of those degrees and
// stays correct when leading coefficients vanish.
Integer resultant_declared(const IntPoly& p, const IntPoly& q, int deg_p,
                           int deg_q);

// The (deg_p + deg_q)-square Sylvester matrix itself, coefficients in
// descending order; row r of the first deg_q rows holds z^(deg_q-1-r) * p,
// the remaining deg_p rows hold the shifts of q. Requires both declared
// degrees >= 1.
class IntMat;
IntMat sylvester_matrix(const IntPoly& p, const IntPoly& q, int deg_p,
                        int deg_q);

// Primitive gcd over Z (sign-normalized to positive leading coefficient).
IntPoly poly_gcd(const IntPoly& p, const IntPoly& q);

// Largest squarefree divisor: p / gcd(p, p'), primitive.
IntPoly squarefree_part(const IntPoly& p);

}  // namespace dynforge
