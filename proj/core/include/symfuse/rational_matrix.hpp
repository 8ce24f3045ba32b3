#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symfuse/rational.hpp"

namespace symfuse {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  /// Columns [first, first + count).
  RationalMatrix column_block(std::size_t first, std::size_t count) const;
  /// Horizontal concatenation; row counts must agree.
  static RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b);

  bool is_zero() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Columns forming a basis of the column space of m.
RationalMatrix column_basis(const RationalMatrix& m);

/// True when every column of `vectors` lies in the column span of `basis`.
bool columns_in_span(const RationalMatrix& basis, const RationalMatrix& vectors);

/// Unique X with basis * X == target. `basis` must have full column rank and
/// the columns of `target` must lie in its span; throws std::invalid_argument otherwise.
RationalMatrix solve_in_basis(const RationalMatrix& basis, const RationalMatrix& target);

}  // namespace symfuse
