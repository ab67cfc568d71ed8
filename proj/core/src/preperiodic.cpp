#include "dynforge/preperiodic.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

#include "dynforge/rational_roots.hpp"

namespace dynforge {

OrbitClassification classify_orbit(const DynSystem& f, const ProjPoint& p,
                                   long cap, const GapConstant* gap) {
  GapConstant local;
  if (gap == nullptr) {
    local = height_gap_constant(f);
    gap = &local;
  }
  const double bar =
      gap->value / (f.degree() - 1) + std::log(2.0);

  OrbitClassification out;
  std::map<ProjPoint, int> index;
  ProjPoint cur = p;
  for (long k = 0; k <= cap; ++k) {
    auto it = index.find(cur);
    if (it != index.end()) {
      out.status = OrbitClassification::Status::Preperiodic;
      out.tail_m = it->second;
      out.period_n = static_cast<int>(k) - it->second;
      return out;
    }
    index.emplace(cur, static_cast<int>(k));
    out.witness.push_back(cur);
    if (naive_height(cur) > bar) {
      out.status = OrbitClassification::Status::Wandering;
      return out;
    }
    cur = f.evaluate(cur);
  }
  fail(Errc::IterationCapExceeded, "orbit classification exceeded cap");
}

PreimageResult rational_preimages(const DynSystem& f, const ProjPoint& q) {
  PreimageResult out;
  // Solutions of b F0(z) - a F1(z) = 0 for Q = (a : b).
  IntPoly g = f.numerator_poly() * q.b() - f.denominator_poly() * q.a();
  if (!g.is_zero()) {
    RootResult roots = rational_roots(g);
    out.complete = roots.complete;
    for (const auto& r : roots.roots) {
      out.points.push_back(ProjPoint::from_rational(r));
    }
  } else {
    // b F0 = a F1 identically contradicts coprimality of the forms.
    fail(Errc::Internal, "preimage polynomial vanished");
  }
  if (f.evaluate(ProjPoint::infinity()) == q) {
    out.points.push_back(ProjPoint::infinity());
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()),
                   out.points.end());
  return out;
}

namespace {

// Divide all coefficients by their joint content so iterated compositions
// stay as small as the pair allows.
void reduce_pair(IntPoly& a, IntPoly& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  if (g <= 1) return;
  auto divide = [&g](const IntPoly& p) {
    std::vector<Integer> v(p.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = p.coeffs()[i] / g;
    return IntPoly(std::move(v));
  };
  a = divide(a);
  b = divide(b);
}

// (A, B) -> (F0(A, B), F1(A, B)) as forms: the declared degree triples the
// bookkeeping but reduces to plain polynomial algebra dehomogenized at y = 1
// as long as powers of both components are combined.
void compose_pair(const DynSystem& f, IntPoly& a, IntPoly& b) {
  const int d = f.degree();
  std::vector<IntPoly> apow(d + 1), bpow(d + 1);
  apow[0] = IntPoly::constant(1);
  bpow[0] = IntPoly::constant(1);
  for (int i = 1; i <= d; ++i) {
    apow[i] = apow[i - 1] * a;
    bpow[i] = bpow[i - 1] * b;
  }
  IntPoly na, nb;
  for (int i = 0; i <= d; ++i) {
    const IntPoly term = apow[i] * bpow[d - i];
    if (f.numerator()[i] != 0) na = na + term * f.numerator()[i];
    if (f.denominator()[i] != 0) nb = nb + term * f.denominator()[i];
  }
  a = std::move(na);
  b = std::move(nb);
  reduce_pair(a, b);
}

}  // namespace

PeriodicPoints rational_periodic_points(const DynSystem& f, int n_max,
                                        long degree_cap) {
  if (n_max < 1) fail(Errc::Internal, "rational_periodic_points: n_max < 1");
  const int d = f.degree();
  PeriodicPoints out;
  std::map<ProjPoint, int> found;

  auto minimal_period = [&](const ProjPoint& p) {
    ProjPoint cur = p;
    for (int k = 1; k <= n_max; ++k) {
      cur = f.evaluate(cur);
      if (cur == p) return k;
    }
    fail(Errc::Internal, "periodic candidate failed to return");
  };

  // Finite candidates: roots of Phi_n for each n within the degree cap.
  IntPoly a = IntPoly::monomial(1, 1);  // identity pair (z, 1)
  IntPoly b = IntPoly::constant(1);
  long deg_n = 1;
  for (int n = 1; n <= n_max; ++n) {
    deg_n *= d;
    if (deg_n > degree_cap) break;
    compose_pair(f, a, b);
    IntPoly phi_n = (a - b.shifted(1)).primitive_part();
    if (phi_n.is_zero()) fail(Errc::Internal, "vanishing iterate form");
    RootResult roots = rational_roots(phi_n);
    if (!roots.complete) out.complete = false;
    for (const auto& r : roots.roots) {
      ProjPoint p = ProjPoint::from_rational(r);
      if (!found.count(p)) found.emplace(p, minimal_period(p));
    }
  }

  // Infinity, when its orbit returns.
  {
    const ProjPoint inf = ProjPoint::infinity();
    ProjPoint cur = inf;
    for (int k = 1; k <= n_max; ++k) {
      cur = f.evaluate(cur);
      if (cur == inf) {
        found.emplace(inf, k);
        break;
      }
    }
  }

  out.points.assign(found.begin(), found.end());
  return out;
}

int census_auto_n_max(int degree) {
  int n = 0;
  long dn = 1;
  while (n < 6 && dn * degree <= 256) {
    dn *= degree;
    ++n;
  }
  return std::max(n, 1);
}

CensusResult preperiodic_census(const DynSystem& f,
                                const CensusParams& params) {
  const GapConstant gap = height_gap_constant(f);
  const int n_max =
      params.n_max > 0 ? params.n_max : census_auto_n_max(f.degree());

  CensusResult out;
  out.complete = true;
  std::set<ProjPoint> points;

  // A classified-preperiodic witness is the full forward orbit: every entry
  // is itself preperiodic, so the whole prefix joins the census.
  auto add_orbit_of = [&](const ProjPoint& p) {
    if (points.count(p)) return;
    OrbitClassification c;
    try {
      c = classify_orbit(f, p, params.classify_cap, &gap);
    } catch (const Error& e) {
      if (e.code() != Errc::IterationCapExceeded) throw;
      out.complete = false;  // undecided point: census is a lower bound
      return;
    }
    if (!c.preperiodic()) return;
    for (const auto& w : c.witness) points.insert(w);
  };

  // Seed 1: rational periodic points (with their cycles — witness covers it).
  PeriodicPoints periodic = rational_periodic_points(f, n_max);
  if (!periodic.complete) out.complete = false;
  for (const auto& [p, period] : periodic.points) add_orbit_of(p);

  // Seed 2: the orbit of 0 when finite.
  add_orbit_of(ProjPoint());

  // Seed 3: height-bounded scan, infinity included.
  add_orbit_of(ProjPoint::infinity());
  for (long b = 1; b <= params.h_scan; ++b) {
    for (long a = -params.h_scan; a <= params.h_scan; ++a) {
      if (std::gcd(std::abs(a), b) != 1) continue;
      add_orbit_of(ProjPoint(Integer(a), Integer(b)));
    }
  }

  // Close under rational preimages (BFS).
  std::deque<ProjPoint> queue(points.begin(), points.end());
  while (!queue.empty()) {
    if (points.size() > params.max_points) {
      out.complete = false;
      break;
    }
    ProjPoint q = queue.front();
    queue.pop_front();
    PreimageResult pre = rational_preimages(f, q);
    if (!pre.complete) out.complete = false;
    for (const auto& p : pre.points) {
      if (points.insert(p).second) queue.push_back(p);
    }
  }

  // Forward closure check; doubles as the preperiodicity re-verification
  // (every point either carried a verified finite orbit or maps into one).
  for (const auto& p : points) {
    ProjPoint img = f.evaluate(p);
    if (!points.count(img)) {
      fail(Errc::Internal, "census not closed under the map");
    }
    OrbitClassification c = classify_orbit(f, p, params.classify_cap, &gap);
    if (!c.preperiodic()) {
      fail(Errc::Internal, "census contains a wandering point");
    }
    out.max_tail = std::max(out.max_tail, c.tail_m);
    out.max_cycle = std::max(out.max_cycle, c.period_n);
    out.edges.emplace_back(p, img);
  }

  out.points.assign(points.begin(), points.end());
  out.count = out.points.size();
  return out;
}

bool detect_dynamical_compression(const Orbit& orbit) {
  if (orbit.entries.empty()) return false;
  std::set<Integer> values(orbit.entries.begin(), orbit.entries.end());
  if (values.size() != orbit.entries.size()) return false;
  const Integer span = *values.rbegin() - *values.begin() + 1;
  return span == Integer(static_cast<long>(values.size()));
}

}  // namespace dynforge
