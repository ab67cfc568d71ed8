#pragma once

#include <compare>
#include <string>

#include "dynforge/numeric.hpp"

namespace dynforge {

// Point on P^1(Q) in lowest terms: gcd(a, b) = 1 and b > 0, except the point
// at infinity which is pinned to (1 : 0).
class ProjPoint {
 public:
  ProjPoint() : a_(0), b_(1) {}  // (0 : 1)
  ProjPoint(Integer a, Integer b);
  static ProjPoint infinity() { return ProjPoint(1, 0); }
  static ProjPoint from_rational(const Rational& q);
  static ProjPoint from_integer(const Integer& z) { return ProjPoint(z, 1); }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  bool is_infinity() const { return b_ == 0; }
  bool is_integer() const { return b_ == 1; }
  Rational to_rational() const;

  // "a/b", plain "a" for integers, "inf" at infinity.
  std::string str() const;

  bool operator==(const ProjPoint& o) const = default;
  // Deterministic ordering for std::map / std::set containers.
  std::strong_ordering operator<=>(const ProjPoint& o) const {
    int c = cmp(a_, o.a_);
    if (c != 0) return c < 0 ? std::strong_ordering::less
                             : std::strong_ordering::greater;
    c = cmp(b_, o.b_);
    if (c != 0) return c < 0 ? std::strong_ordering::less
                             : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Integer a_, b_;
};

}  // namespace dynforge
