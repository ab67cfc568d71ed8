#pragma once

#include <vector>

#include "dynforge/poly.hpp"

namespace dynforge {

struct RootResult {
  std::vector<Rational> roots;  // distinct, sorted ascending
  // False only if no usable prime was found for the modular stage (the
  // polynomial's leading coefficient times discriminant would have to be
  // divisible by essentially every small prime). Callers treat an
  // incomplete result as "lower bound only".
  bool complete = true;
};

// All rational roots of a nonzero integer polynomial, without multiplicity.
// Route: strip zero roots -> primitive squarefree part -> degree <= 2 solved
// directly; otherwise roots mod a good prime p (p does not divide lc, image
// squarefree), quadratic Hensel lifting past 2*A*B (A = |trailing|,
// B = |leading|), rational reconstruction, exact verification.
RootResult rational_roots(const IntPoly& p);

}  // namespace dynforge
