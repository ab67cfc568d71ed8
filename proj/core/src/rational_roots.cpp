#include "dynforge/rational_roots.hpp"

#include <algorithm>
#include <cstdint>

namespace dynforge {

namespace {

// ---- arithmetic in F_p for word-sized p (p < 2^31) ----

using ModPoly = std::vector<uint64_t>;  // ascending, normalized

void mod_normalize(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly reduce_mod(const IntPoly& p, uint64_t m) {
  ModPoly f(p.coeffs().size());
  for (size_t i = 0; i < f.size(); ++i) {
    f[i] = mpz_fdiv_ui(p.coeffs()[i].get_mpz_t(), static_cast<unsigned long>(m));
  }
  mod_normalize(f);
  return f;
}

ModPoly mod_derivative(const ModPoly& f, uint64_t m) {
  if (f.size() <= 1) return {};
  ModPoly d(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) d[i - 1] = (f[i] * (i % m)) % m;
  mod_normalize(d);
  return d;
}

uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

uint64_t mod_inv(uint64_t a, uint64_t p) { return mod_pow(a, p - 2, p); }

// Euclidean gcd degree test; we only need to know whether gcd is constant.
bool mod_coprime(ModPoly a, ModPoly b, uint64_t p) {
  while (!b.empty()) {
    // a mod b
    uint64_t inv = mod_inv(b.back(), p);
    while (a.size() >= b.size()) {
      uint64_t c = a.back() * inv % p;
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        a[off + i] = (a[off + i] + p - c * b[i] % p) % p;
      }
      mod_normalize(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.size() == 1;  // constant nonzero gcd
}

uint64_t mod_eval(const ModPoly& f, uint64_t x, uint64_t p) {
  uint64_t acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
  return acc;
}

// ---- Hensel lifting ----

// Evaluate p at r modulo m (Horner with mpz reductions).
Integer eval_mod(const IntPoly& p, const Integer& r, const Integer& m) {
  Integer acc = 0;
  for (size_t i = p.coeffs().size(); i-- > 0;) {
    acc = (acc * r + p.coeffs()[i]) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

// Wang rational reconstruction: a/b with a == r*b (mod m), |a| <= bound_a,
// 0 < b <= bound_b. Returns false when no convergent lands in range.
bool rational_reconstruct(const Integer& r, const Integer& m,
                          const Integer& bound_a, const Integer& bound_b,
                          Integer* num, Integer* den) {
  Integer r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (r1 > bound_a) {
    if (r1 == 0) return false;
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (t1 == 0) return false;
  if (t1 < 0) {
    r1 = -r1;
    t1 = -t1;
  }
  if (t1 > bound_b) return false;
  *num = r1;
  *den = t1;
  return true;
}

void push_root(std::vector<Rational>& roots, Rational q) {
  q.canonicalize();
  roots.push_back(std::move(q));
}

// Roots of a primitive squarefree polynomial of degree >= 1.
void squarefree_roots(const IntPoly& s, std::vector<Rational>& roots,
                      bool* complete) {
  const int d = s.degree();
  if (d <= 0) return;
  if (d == 1) {
    push_root(roots, Rational(-s.coeff(0), s.coeff(1)));
    return;
  }
  if (d == 2) {
    const Integer &a = s.coeff(2), &b = s.coeff(1), &c = s.coeff(0);
    Integer disc = b * b - 4 * a * c;
    if (disc < 0) return;
    if (mpz_perfect_square_p(disc.get_mpz_t())) {
      Integer root;
      mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
      push_root(roots, Rational(-b + root, 2 * a));
      if (root != 0) push_root(roots, Rational(-b - root, 2 * a));
    }
    return;
  }

  // Bounds from the rational root theorem (s primitive, s(0) != 0).
  const Integer bound_a = abs(s.coeff(0));
  const Integer bound_b = abs(s.lc());
  const Integer target = 2 * bound_a * bound_b;

  // Pick a prime where the image stays squarefree of full degree.
  uint64_t prime = 0;
  ModPoly sbar;
  {
    Integer p = 2;
    // First primes essentially always work; the sweep bound keeps the root
    // scan below affordable and the completeness flag covers the remainder.
    while (p < (1 << 21)) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      uint64_t pp = p.get_ui();
      if (mpz_divisible_ui_p(s.lc().get_mpz_t(), pp)) continue;
      ModPoly f = reduce_mod(s, pp);
      if (static_cast<int>(f.size()) - 1 != d) continue;
      ModPoly df = mod_derivative(f, pp);
      if (df.empty()) continue;
      if (!mod_coprime(f, df, pp)) continue;
      prime = pp;
      sbar = std::move(f);
      break;
    }
  }
  if (prime == 0) {
    *complete = false;
    return;
  }

  // Every rational root a/b reduces to a distinct simple root mod prime.
  std::vector<uint64_t> residues;
  for (uint64_t r = 0; r < prime; ++r) {
    if (mod_eval(sbar, r, prime) == 0) residues.push_back(r);
  }

  const IntPoly ds = s.derivative();
  for (uint64_t r0 : residues) {
    // Quadratic (Newton) lift until the modulus clears 2*A*B.
    Integer m = Integer(static_cast<unsigned long>(prime));
    Integer r = Integer(static_cast<unsigned long>(r0));
    while (m <= target) {
      Integer m2 = m * m;
      Integer fval = eval_mod(s, r, m2);
      Integer dval = eval_mod(ds, r, m2);
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), dval.get_mpz_t(), m2.get_mpz_t()) == 0) {
        fail(Errc::Internal, "hensel: derivative not invertible");
      }
      r = (r - fval * inv) % m2;
      if (r < 0) r += m2;
      m = m2;
    }
    Integer num, den;
    if (!rational_reconstruct(r, m, bound_a, bound_b, &num, &den)) continue;
    if (den == 0) continue;
    Rational cand(num, den);
    cand.canonicalize();
    if (s.eval(cand) == 0) push_root(roots, std::move(cand));
  }
}

}  // namespace

RootResult rational_roots(const IntPoly& p) {
  if (p.is_zero()) fail(Errc::Internal, "rational_roots of zero polynomial");
  RootResult out;
  // Strip zero roots.
  size_t k = 0;
  while (p.coeff(k) == 0) ++k;
  if (k > 0) out.roots.emplace_back(0);
  std::vector<Integer> rest(p.coeffs().begin() + static_cast<long>(k),
                            p.coeffs().end());
  IntPoly q = IntPoly(std::move(rest)).primitive_part();
  if (q.degree() >= 1) {
    IntPoly s = squarefree_part(q);
    squarefree_roots(s, out.roots, &out.complete);
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const Rational& a, const Rational& b) { return a < b; });
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()),
                  out.roots.end());
  return out;
}

}  // namespace dynforge
