#include "dynforge/linalg.hpp"

#include <algorithm>

namespace dynforge {

namespace {

struct Echelon {
  IntMat m;
  std::vector<size_t> pivot_cols;
  int sign = 1;
};

// Fraction-free Gaussian elimination (Bareiss). Leaves the matrix in row
// echelon form where row k has its pivot in pivot_cols[k]; all exact
// divisions. Works for rectangular matrices.
Echelon bareiss_echelon(IntMat m) {
  Echelon e{std::move(m), {}, 1};
  IntMat& a = e.m;
  Integer prev = 1;
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    // Pivot search in this column.
    size_t pr = row;
    while (pr < a.rows() && a.at(pr, col) == 0) ++pr;
    if (pr == a.rows()) continue;
    if (pr != row) {
      for (size_t c = 0; c < a.cols(); ++c) {
        std::swap(a.at(pr, c), a.at(row, c));
      }
      e.sign = -e.sign;
    }
    const Integer pivot = a.at(row, col);
    for (size_t r = row + 1; r < a.rows(); ++r) {
      const Integer head = a.at(r, col);
      for (size_t c = col; c < a.cols(); ++c) {
        Integer v = a.at(r, c) * pivot - head * a.at(row, c);
        a.at(r, c) = v / prev;  // exact (Bareiss identity)
      }
    }
    prev = pivot;
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

Integer det_bareiss(IntMat m) {
  if (m.rows() != m.cols()) fail(Errc::Internal, "det of non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return 1;
  Echelon e = bareiss_echelon(std::move(m));
  if (e.pivot_cols.size() < n) return 0;
  // After full-rank Bareiss elimination the last pivot IS the determinant
  // (up to row-swap sign).
  Integer d = e.m.at(n - 1, n - 1);
  return e.sign > 0 ? d : -d;
}

std::optional<std::vector<Rational>> solve_square(
    const IntMat& a, const std::vector<Integer>& b) {
  if (a.rows() != a.cols() || b.size() != a.rows()) {
    fail(Errc::Internal, "solve_square: shape mismatch");
  }
  const size_t n = a.rows();
  // Augment and eliminate.
  IntMat aug(n, n + 1);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n) = b[r];
  }
  Echelon e = bareiss_echelon(std::move(aug));
  // Full rank requires n pivots all within the first n columns.
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] >= n) return std::nullopt;
  // Back substitution over Q.
  std::vector<Rational> x(n);
  for (size_t i = n; i-- > 0;) {
    Rational acc(e.m.at(i, n));
    for (size_t j = i + 1; j < n; ++j) {
      acc -= Rational(e.m.at(i, j)) * x[j];
    }
    x[i] = acc / Rational(e.m.at(i, i));
    x[i].canonicalize();
  }
  return x;
}

size_t kernel_dimension(const IntMat& a, std::vector<Integer>* kernel) {
  const size_t cols = a.cols();
  Echelon e = bareiss_echelon(a);
  const size_t rank = e.pivot_cols.size();
  const size_t nullity = cols - rank;
  if (nullity != 1 || kernel == nullptr) return nullity;

  // The unique non-pivot column is the free variable; set it to 1 and back
  // substitute the pivots over Q, then clear denominators.
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : e.pivot_cols) is_pivot[c] = true;
  size_t free_col = cols;
  for (size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  std::vector<Rational> x(cols, Rational(0));
  x[free_col] = 1;
  for (size_t i = rank; i-- > 0;) {
    const size_t pc = e.pivot_cols[i];
    Rational acc(0);
    for (size_t j = pc + 1; j < cols; ++j) {
      if (x[j] != 0) acc -= Rational(e.m.at(i, j)) * x[j];
    }
    x[pc] = acc / Rational(e.m.at(i, pc));
    x[pc].canonicalize();
  }
  Integer lcm = 1;
  for (const auto& q : x) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  }
  std::vector<Integer> v(cols);
  Integer g = 0;
  for (size_t i = 0; i < cols; ++i) {
    Rational scaled = x[i] * Rational(lcm);
    scaled.canonicalize();
    v[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& c : v) c /= g;
  }
  *kernel = std::move(v);
  return nullity;
}

}  // namespace dynforge
