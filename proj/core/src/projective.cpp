#include "dynforge/projective.hpp"

namespace dynforge {

ProjPoint::ProjPoint(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == 0 && b_ == 0) fail(Errc::Internal, "projective point (0 : 0)");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  if (b_ < 0) g = -g;
  if (g != 1) {
    a_ /= g;
    b_ /= g;
  }
  if (b_ == 0 && a_ < 0) a_ = -a_;  // (1 : 0) canonical at infinity
}

ProjPoint ProjPoint::from_rational(const Rational& q) {
  return ProjPoint(q.get_num(), q.get_den());
}

Rational ProjPoint::to_rational() const {
  if (is_infinity()) fail(Errc::Internal, "to_rational at infinity");
  return Rational(a_, b_);
}

std::string ProjPoint::str() const {
  if (is_infinity()) return "inf";
  if (b_ == 1) return a_.get_str();
  return a_.get_str() + "/" + b_.get_str();
}

}  // namespace dynforge
