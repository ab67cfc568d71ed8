#pragma once

#include <optional>
#include <vector>

#include "dynforge/numeric.hpp"

namespace dynforge {

// Small dense integer matrix, row-major.
class IntMat {
 public:
  IntMat(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Integer(0)) {}
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Integer& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Integer& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

 private:
  size_t rows_, cols_;
  std::vector<Integer> a_;
};

// Determinant by Bareiss fraction-free elimination (exact divisions only).
Integer det_bareiss(IntMat m);

// Solve the square system A x = b exactly over Q. Returns nullopt when A is
// singular.
std::optional<std::vector<Rational>> solve_square(const IntMat& a,
                                                  const std::vector<Integer>& b);

// Right null space of A (rows x cols, rows < cols allowed). Returns the
// nullity; when the nullity is exactly 1, *kernel receives a primitive
// integer spanning vector.
size_t kernel_dimension(const IntMat& a, std::vector<Integer>* kernel);

}  // namespace dynforge
