#include "dynforge/poly.hpp"

#include <algorithm>
#include <sstream>

#include "dynforge/linalg.hpp"

namespace dynforge {

namespace {
const Integer kZero = 0;
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly IntPoly::constant(Integer c) {
  return IntPoly(std::vector<Integer>{std::move(c)});
}

IntPoly IntPoly::monomial(Integer c, size_t power) {
  std::vector<Integer> v(power + 1, Integer(0));
  v[power] = std::move(c);
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::coeff(size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Integer& IntPoly::lc() const {
  if (is_zero()) fail(Errc::Internal, "lc of zero polynomial");
  return coeffs_.back();
}

Integer IntPoly::eval(const Integer& z) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

Rational IntPoly::eval(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + Rational(*it);
  }
  return acc;
}

Integer IntPoly::eval_homogeneous(size_t declared_degree, const Integer& a,
                                  const Integer& b) const {
  if (static_cast<int>(declared_degree) < degree()) {
    fail(Errc::Internal, "declared degree below actual degree");
  }
  // Horner in a with a final multiplication by the matching power of b.
  Integer acc = 0;
  Integer bpow = 1;
  size_t n = declared_degree;
  // acc = sum_{i=0..n} c_i a^i b^{n-i}; iterate i = n down to 0.
  for (size_t i = n + 1; i-- > 0;) {
    acc = acc * a + coeff(i) * bpow;
    if (i > 0) bpow *= b;
  }
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly();
  std::vector<Integer> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * Integer(static_cast<long>(i));
  }
  return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  Integer g = content();
  if (lc() < 0) g = -g;
  std::vector<Integer> v(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] / g;
  return IntPoly(std::move(v));
}

double IntPoly::coeff_log_height() const {
  double best = 0.0;
  bool seen = false;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    double h = log_abs(c);
    if (!seen || h > best) best = h, seen = true;
  }
  return seen ? best : 0.0;
}

IntPoly IntPoly::operator-() const {
  std::vector<Integer> v(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Integer> v(std::max(coeffs_.size(), o.coeffs_.size()),
                         Integer(0));
  for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Integer> v(std::max(coeffs_.size(), o.coeffs_.size()),
                         Integer(0));
  for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Integer> v(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Integer& c) const {
  std::vector<Integer> v(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted(size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Integer> v(coeffs_.size() + k, Integer(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
  return IntPoly(std::move(v));
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer abs_c = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || abs_c != 1) {
      os << abs_c.get_str();
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// Pseudo-remainder: lc(q)^(deg p - deg q + 1) * p mod q, computed in place.
IntPoly pseudo_rem(IntPoly p, const IntPoly& q) {
  int dq = q.degree();
  std::vector<Integer> r(p.coeffs());
  const Integer& qlc = q.lc();
  while (static_cast<int>(r.size()) - 1 >= dq) {
    size_t dr = r.size() - 1;
    Integer head = r[dr];
    for (auto& c : r) c *= qlc;
    for (int i = 0; i <= dq; ++i) {
      r[dr - dq + i] -= head * q.coeff(i);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) break;
  }
  return IntPoly(std::move(r));
}

}  // namespace

Integer resultant(const IntPoly& p, const IntPoly& q) {
  return resultant_declared(p, q, std::max(p.degree(), 0),
                            std::max(q.degree(), 0));
}

Integer resultant_declared(const IntPoly& p, const IntPoly& q, int deg_p,
                           int deg_q) {
  if (p.degree() > deg_p || q.degree() > deg_q) {
    fail(Errc::Internal, "resultant_declared: declared degree too small");
  }
  if (deg_p == 0 && deg_q == 0) return 1;
  if (p.is_zero() || q.is_zero()) return 0;
  if (deg_p == 0) return ipow(p.coeff(0), static_cast<unsigned long>(deg_q));
  if (deg_q == 0) return ipow(q.coeff(0), static_cast<unsigned long>(deg_p));
  // Determinant of the Sylvester matrix at the declared degrees; this is the
  // resultant of the corresponding binary forms, which is what all callers
  // want (vanishing leading coefficients included).
  return det_bareiss(sylvester_matrix(p, q, deg_p, deg_q));
}

IntMat sylvester_matrix(const IntPoly& p, const IntPoly& q, int deg_p,
                        int deg_q) {
  if (deg_p < 1 || deg_q < 1 || p.degree() > deg_p || q.degree() > deg_q) {
    fail(Errc::Internal, "sylvester_matrix: bad declared degrees");
  }
  const size_t n = static_cast<size_t>(deg_p + deg_q);
  IntMat syl(n, n);
  for (int r = 0; r < deg_q; ++r) {
    for (int j = 0; j <= deg_p; ++j) {
      syl.at(r, r + j) = p.coeff(static_cast<size_t>(deg_p - j));
    }
  }
  for (int r = 0; r < deg_p; ++r) {
    for (int j = 0; j <= deg_q; ++j) {
      syl.at(static_cast<size_t>(deg_q + r), r + j) =
          q.coeff(static_cast<size_t>(deg_q - j));
    }
  }
  return syl;
}

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero()) return q.is_zero() ? IntPoly() : q.primitive_part();
  if (q.is_zero()) return p.primitive_part();
  IntPoly a = p.primitive_part(), b = q.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero() && b.degree() > 0) {
    IntPoly r = pseudo_rem(a, b).primitive_part();
    a = b;
    b = r;
  }
  if (!b.is_zero()) return IntPoly::constant(1);  // coprime
  return a.primitive_part();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero() || p.degree() == 0) return p.primitive_part();
  IntPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive_part();
  // Exact division p / g over Q, clearing to a primitive integer result.
  // Since g | p in Z[x] up to content, do fraction-free synthetic division.
  const IntPoly a = p.primitive_part();
  int dq = a.degree() - g.degree();
  std::vector<Rational> quot(dq + 1);
  std::vector<Rational> rem(a.coeffs().size());
  for (size_t i = 0; i < rem.size(); ++i) rem[i] = Rational(a.coeff(i));
  for (int k = dq; k >= 0; --k) {
    Rational c = rem[k + g.degree()] / Rational(g.lc());
    quot[k] = c;
    if (c != 0) {
      for (int j = 0; j <= g.degree(); ++j) {
        rem[k + j] -= c * Rational(g.coeff(j));
      }
    }
  }
  // Clear denominators.
  Integer lcm = 1;
  for (auto& c : quot) {
    c.canonicalize();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  std::vector<Integer> v(quot.size());
  for (size_t i = 0; i < quot.size(); ++i) {
    Rational scaled = quot[i] * Rational(lcm);
    scaled.canonicalize();
    v[i] = scaled.get_num();
  }
  return IntPoly(std::move(v)).primitive_part();
}

}  // namespace dynforge
