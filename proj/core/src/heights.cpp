#include "dynforge/heights.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "dynforge/linalg.hpp"

namespace dynforge {

namespace {

const Integer& coord_mag(const ProjPoint& p) {
  return mpz_cmpabs(p.a().get_mpz_t(), p.b().get_mpz_t()) >= 0 ? p.a() : p.b();
}

// ln(|mag|) / d^n with one final rounding to double. The naive
// log_abs(mag) / pow(d, n) loses enough precision at large n to matter for
// the tightest height tolerances, so the division happens at 128 bits.
double precise_log_ratio(const Integer& mag, int d, long n) {
  mpfr_t t, dn;
  mpfr_init2(t, 128);
  mpfr_init2(dn, 128);
  Integer m = abs(mag);
  mpfr_set_z(t, m.get_mpz_t(), MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  mpfr_ui_pow_ui(dn, static_cast<unsigned long>(d),
                 static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_div(t, t, dn, MPFR_RNDN);
  double out = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  mpfr_clear(dn);
  return out;
}

HeightValue height_limit(const DynSystem& f, const ProjPoint& p,
                         double abs_eps, double rel_eps, int max_iterations,
                         double coord_log_budget, bool throw_on_cap,
                         const GapConstant* gap) {
  GapConstant local;
  if (gap == nullptr) {
    local = height_gap_constant(f);
    gap = &local;
  }
  const int d = f.degree();
  const double tail0 = gap->value / (d - 1);

  ProjPoint cur = p;
  std::set<ProjPoint> seen{cur};
  // Once an iterate clears the wandering threshold its canonical height is
  // certified positive, so no later iterate can revisit anything: stop
  // paying for repeat detection.
  bool track_repeats = true;
  const double wandering_bar = tail0 + std::log(2.0);

  double tail = tail0;    // certified bound on |hhat - h(f^n P)/d^n|
  double inv_dn = 1.0;    // 1 / d^n
  long n = 0;
  for (;;) {
    const double h_cur = naive_height(cur);
    const double est = h_cur * inv_dn;
    double target = abs_eps;
    if (rel_eps > 0 && est > 0) target = std::min(abs_eps, rel_eps * est);
    if (tail <= target) break;
    if (n >= max_iterations) {
      if (throw_on_cap) {
        fail(Errc::IterationCapExceeded,
             "canonical height not certified within iteration cap");
      }
      break;
    }
    if (coord_log_budget > 0 && h_cur > coord_log_budget) break;
    cur = f.evaluate(cur);
    ++n;
    tail /= d;
    inv_dn /= d;
    if (track_repeats) {
      if (naive_height(cur) > wandering_bar) {
        track_repeats = false;
      } else if (!seen.insert(cur).second) {
        return {0.0, 0.0};  // orbit repeated: preperiodic, exactly 0
      }
    }
  }
  return {precise_log_ratio(coord_mag(cur), d, n), tail};
}

}  // namespace

double naive_height(const ProjPoint& p) { return log_abs(coord_mag(p)); }

double naive_height(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  const Integer num = r.get_num();
  const Integer den = r.get_den();
  return log_abs(mpz_cmpabs(num.get_mpz_t(), den.get_mpz_t()) >= 0 ? num
                                                                   : den);
}

GapConstant height_gap_constant(const DynSystem& f) {
  const int d = f.degree();
  GapConstant g;
  g.upper = f.coeff_height() + std::log(static_cast<double>(d + 1));

  // Cofactors G with G1 F0 + G2 F1 = Res * x^(2d-1) and the y^(2d-1) twin.
  // In the Sylvester layout, a cofactor pair (u, v) of degree d-1 satisfies
  // S^T (u | v) = Res * e_k with e_0 the x^(2d-1) target and e_{2d-1} the
  // y^(2d-1) one; Res * (rational solution) is then integral (it is a column
  // of the adjugate).
  const IntMat syl =
      sylvester_matrix(f.numerator_poly(), f.denominator_poly(), d, d);
  const size_t n = syl.rows();
  IntMat syl_t(n, n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) syl_t.at(r, c) = syl.at(c, r);
  }
  const Integer res = f.resultant();
  Integer max_cof = 0;
  for (size_t target : {size_t{0}, n - 1}) {
    std::vector<Integer> rhs(n, Integer(0));
    rhs[target] = 1;
    auto sol = solve_square(syl_t, rhs);
    if (!sol) fail(Errc::Internal, "cofactor system singular");
    for (auto& x : *sol) {
      Rational scaled = x * Rational(res);
      scaled.canonicalize();
      if (scaled.get_den() != 1) {
        fail(Errc::Internal, "cofactor solution not integral");
      }
      Integer c = scaled.get_num();
      if (mpz_cmpabs(c.get_mpz_t(), max_cof.get_mpz_t()) > 0) {
        max_cof = abs(c);
      }
    }
  }
  double h_cof = max_cof == 0 ? 0.0 : log_abs(max_cof);
  g.lower = h_cof + std::log(static_cast<double>(2 * d));
  g.value = std::max(g.upper, g.lower);
  return g;
}

HeightValue canonical_height(const DynSystem& f, const ProjPoint& p,
                             double eps, int max_iterations) {
  if (!(eps > 0)) fail(Errc::Internal, "canonical_height needs eps > 0");
  return height_limit(f, p, eps, /*rel_eps=*/0.0, max_iterations,
                      /*coord_log_budget=*/0.0, /*throw_on_cap=*/true,
                      nullptr);
}

HeightValue canonical_height_adaptive(const DynSystem& f, const ProjPoint& p,
                                      const AdaptiveHeightOptions& opts,
                                      const GapConstant* gap) {
  return height_limit(f, p, opts.abs_eps, opts.rel_eps, opts.max_iterations,
                      opts.coord_log_budget, /*throw_on_cap=*/false, gap);
}

}  // namespace dynforge
