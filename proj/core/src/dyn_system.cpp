#include "dynforge/dyn_system.hpp"

#include <sstream>

namespace dynforge {

namespace {

// Multiply two binary forms given as ascending x-coefficient vectors.
std::vector<Integer> form_mul(const std::vector<Integer>& a,
                              const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// F(a x + b y, c x + d y) for a form F of exact homogeneous degree deg given
// by ascending x-coefficients (possibly with zero entries).
std::vector<Integer> form_substitute(const std::vector<Integer>& f, int deg,
                                     const Mobius& m) {
  // Power tables for the two linear forms.
  std::vector<std::vector<Integer>> p1(deg + 1), p2(deg + 1);
  p1[0] = {Integer(1)};
  p2[0] = {Integer(1)};
  const std::vector<Integer> l1 = {m.b, m.a};  // a x + b y
  const std::vector<Integer> l2 = {m.d, m.c};  // c x + d y
  for (int i = 1; i <= deg; ++i) {
    p1[i] = form_mul(p1[i - 1], l1);
    p2[i] = form_mul(p2[i - 1], l2);
  }
  std::vector<Integer> out(deg + 1, Integer(0));
  for (int i = 0; i <= deg; ++i) {
    if (f[i] == 0) continue;
    std::vector<Integer> term = form_mul(p1[i], p2[deg - i]);
    for (size_t k = 0; k < term.size(); ++k) out[k] += f[i] * term[k];
  }
  return out;
}

std::string rational_poly_str(const std::vector<Rational>& coeffs,
                              const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs.size(); i-- > 0;) {
    Rational c = coeffs[i];
    c.canonicalize();
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (i == 0 || a != 1) {
      os << a.get_str();
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace

Mobius::Mobius(Integer a_, Integer b_, Integer c_, Integer d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (det() == 0) fail(Errc::DegenerateMap, "Mobius with zero determinant");
}

DynSystem::DynSystem(int degree, std::vector<Integer> f0,
                     std::vector<Integer> f1)
    : degree_(degree), f0_(std::move(f0)), f1_(std::move(f1)) {
  if (degree_ < 2) fail(Errc::DegenerateDegree, "degree must be >= 2");
  const size_t n = static_cast<size_t>(degree_) + 1;
  if (f0_.size() > n || f1_.size() > n) {
    fail(Errc::Internal, "coefficient list longer than degree + 1");
  }
  f0_.resize(n, Integer(0));
  f1_.resize(n, Integer(0));

  // Joint content and canonical sign (highest nonzero coefficient of F1 > 0).
  Integer g = 0;
  for (const auto& c : f0_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (const auto& c : f1_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) fail(Errc::DegenerateMap, "zero map");
  int sign = 0;
  for (size_t i = n; i-- > 0;) {
    if (f1_[i] != 0) {
      sign = f1_[i] > 0 ? 1 : -1;
      break;
    }
  }
  if (sign == 0) fail(Errc::DegenerateMap, "zero denominator form");
  if (sign < 0) g = -g;
  if (g != 1) {
    for (auto& c : f0_) c /= g;
    for (auto& c : f1_) c /= g;
  }

  polynomial_ = true;
  for (size_t i = 1; i < n; ++i) {
    if (f1_[i] != 0) polynomial_ = false;
  }

  if (resultant() == 0) {
    fail(Errc::DegenerateMap, "resultant vanishes (common factor)");
  }
}

DynSystem DynSystem::from_rational_coeffs(int degree,
                                          const std::vector<Rational>& num,
                                          const std::vector<Rational>& den) {
  Integer lcm = 1;
  auto fold = [&lcm](const std::vector<Rational>& v) {
    for (const auto& q : v) {
      Rational c = q;
      c.canonicalize();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
  };
  fold(num);
  fold(den);
  auto scale = [&lcm](const std::vector<Rational>& v) {
    std::vector<Integer> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      Rational s = v[i] * Rational(lcm);
      s.canonicalize();
      out[i] = s.get_num();
    }
    return out;
  };
  return DynSystem(degree, scale(num), scale(den));
}

ProjPoint DynSystem::evaluate(const ProjPoint& p) const {
  IntPoly f0(f0_), f1(f1_);
  Integer x = f0.eval_homogeneous(static_cast<size_t>(degree_), p.a(), p.b());
  Integer y = f1.eval_homogeneous(static_cast<size_t>(degree_), p.a(), p.b());
  return ProjPoint(std::move(x), std::move(y));
}

std::vector<ProjPoint> DynSystem::iterate(const ProjPoint& p, int n) const {
  std::vector<ProjPoint> orbit;
  orbit.reserve(static_cast<size_t>(n) + 1);
  orbit.push_back(p);
  for (int i = 0; i < n; ++i) orbit.push_back(evaluate(orbit.back()));
  return orbit;
}

Rational DynSystem::derivative_value(const Rational& z) const {
  IntPoly num(f0_), den(f1_);
  Rational dz = den.eval(z);
  if (dz == 0) fail(Errc::Internal, "derivative_value at a pole");
  Rational w = num.derivative().eval(z) * dz - num.eval(z) * den.derivative().eval(z);
  Rational out = w / (dz * dz);
  out.canonicalize();
  return out;
}

Integer DynSystem::resultant() const {
  return resultant_declared(IntPoly(f0_), IntPoly(f1_), degree_, degree_);
}

double DynSystem::coeff_height() const {
  double best = 0.0;
  bool seen = false;
  for (const auto* v : {&f0_, &f1_}) {
    for (const auto& c : *v) {
      if (c == 0) continue;
      double h = log_abs(c);
      if (!seen || h > best) best = h, seen = true;
    }
  }
  return seen ? best : 0.0;
}

std::string DynSystem::display(const std::string& var) const {
  if (polynomial_) {
    std::vector<Rational> coeffs(f0_.size());
    for (size_t i = 0; i < f0_.size(); ++i) {
      coeffs[i] = Rational(f0_[i], f1_[0]);
    }
    return rational_poly_str(coeffs, var);
  }
  return "(" + IntPoly(f0_).str(var) + ")/(" + IntPoly(f1_).str(var) + ")";
}

nlohmann::json DynSystem::to_json() const {
  auto strs = [](const std::vector<Integer>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(c.get_str());
    return out;
  };
  return nlohmann::json{{"degree", degree_},
                        {"numerator", strs(f0_)},
                        {"denominator", strs(f1_)},
                        {"polynomial", polynomial_}};
}

DynSystem DynSystem::from_json(const nlohmann::json& j) {
  auto ints = [](const nlohmann::json& arr) {
    std::vector<Integer> out;
    for (const auto& e : arr) {
      if (e.is_string()) {
        out.emplace_back(e.get<std::string>());
      } else {
        out.emplace_back(static_cast<long>(e.get<long long>()));
      }
    }
    return out;
  };
  return DynSystem(j.at("degree").get<int>(), ints(j.at("numerator")),
                   ints(j.at("denominator")));
}

DynSystem conjugate(const DynSystem& f, const Mobius& m) {
  const int d = f.degree();
  std::vector<Integer> f0m = form_substitute(f.numerator(), d, m);
  std::vector<Integer> f1m = form_substitute(f.denominator(), d, m);
  // adj(M) applied to the value side.
  std::vector<Integer> g0(d + 1), g1(d + 1);
  for (int i = 0; i <= d; ++i) {
    g0[i] = m.d * f0m[i] - m.b * f1m[i];
    g1[i] = -m.c * f0m[i] + m.a * f1m[i];
  }
  return DynSystem(d, std::move(g0), std::move(g1));
}

}  // namespace dynforge
