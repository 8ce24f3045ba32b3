#include "symfuse/rational_matrix.hpp"

#include <stdexcept>

namespace symfuse {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::out_of_range("column_block: range exceeds matrix");
  RationalMatrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  return out;
}

RationalMatrix RationalMatrix::hconcat(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hconcat: row counts differ");
  RationalMatrix out(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) out(r, a.cols_ + c) = b(r, c);
  }
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix add: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix subtract: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix multiply: inner dimensions differ");
  RationalMatrix c(a.rows_, b.cols_);
  Rational prod;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        mpq_mul(prod.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
        c(i, j) += prod;
      }
    }
  }
  return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (sgn(m(row, c)) != 0) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

RationalMatrix column_basis(const RationalMatrix& m) {
  RationalMatrix reduced = m;
  const auto pivots = row_reduce(reduced);
  RationalMatrix out(m.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, pivots[k]);
  return out;
}

bool columns_in_span(const RationalMatrix& basis, const RationalMatrix& vectors) {
  return rank(RationalMatrix::hconcat(basis, vectors)) == rank(basis);
}

RationalMatrix solve_in_basis(const RationalMatrix& basis, const RationalMatrix& target) {
  RationalMatrix augmented = RationalMatrix::hconcat(basis, target);
  const auto pivots = row_reduce(augmented);
  const std::size_t k = basis.cols();
  if (pivots.size() != k) throw std::invalid_argument("solve_in_basis: basis is rank deficient or target outside span");
  for (std::size_t p = 0; p < k; ++p)
    if (pivots[p] != p) throw std::invalid_argument("solve_in_basis: basis columns are dependent");
  RationalMatrix x(k, target.cols());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < target.cols(); ++c) x(r, c) = augmented(r, k + c);
  return x;
}

}  // namespace symfuse
