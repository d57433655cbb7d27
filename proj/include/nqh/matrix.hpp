#pragma once

#include <cstddef>
#include <vector>

#include "nqh/rational.hpp"

namespace nqh {

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Sub-matrix on the listed rows and columns, in the given order.
  RationalMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Contiguous block [r0, r0 + nr) x [c0, c0 + nc).
  RationalMatrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Rows are first scaled to integers by the lcm of their denominators, the
/// integer determinant is computed with exact Bareiss divisions, and the
/// scale is divided back out. Throws InvalidInput on a non-square matrix.
/// The empty matrix has determinant 1.
Rational det_exact(const RationalMatrix& m);

}  // namespace nqh
