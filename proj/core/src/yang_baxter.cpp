#include "symfuse/yang_baxter.hpp"

#include <stdexcept>

#include "symfuse/fusion.hpp"

namespace symfuse {

namespace {

std::vector<std::size_t> digits_of(std::size_t index, std::size_t dim, std::size_t power) {
  std::vector<std::size_t> d(power);
  for (std::size_t k = power; k-- > 0;) {
    d[k] = index % dim;
    index /= dim;
  }
  return d;
}

std::size_t index_of(const std::vector<std::size_t>& digits, std::size_t dim) {
  std::size_t index = 0;
  for (std::size_t d : digits) index = index * dim + d;
  return index;
}

std::string pair_text(const Rational& u, const Rational& v) { return "u=" + to_string(u) + " v=" + to_string(v); }

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

}  // namespace

TensorOperator::TensorOperator(std::size_t dim, std::size_t power, RationalMatrix matrix)
    : dim_(dim), power_(power), matrix_(std::move(matrix)) {
  std::size_t expected = 1;
  for (std::size_t k = 0; k < power; ++k) expected *= dim;
  if (matrix_.rows() != expected || matrix_.cols() != expected) {
    throw std::invalid_argument("TensorOperator: matrix is not N^k x N^k");
  }
}

TensorOperator TensorOperator::identity(std::size_t dim, std::size_t power) {
  return TensorOperator(dim, power, RationalMatrix::identity(tensor_size(dim, power, static_cast<std::size_t>(-1))));
}

TensorOperator& TensorOperator::operator*=(const Rational& s) {
  matrix_ *= s;
  return *this;
}

TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
  if (a.dim_ != b.dim_ || a.power_ != b.power_) throw std::invalid_argument("TensorOperator multiply: space mismatch");
  return TensorOperator(a.dim_, a.power_, a.matrix_ * b.matrix_);
}

TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
  if (a.dim_ != b.dim_ || a.power_ != b.power_) throw std::invalid_argument("TensorOperator add: space mismatch");
  return TensorOperator(a.dim_, a.power_, a.matrix_ + b.matrix_);
}

TensorOperator operator-(const TensorOperator& a, const TensorOperator& b) {
  if (a.dim_ != b.dim_ || a.power_ != b.power_) throw std::invalid_argument("TensorOperator subtract: space mismatch");
  return TensorOperator(a.dim_, a.power_, a.matrix_ - b.matrix_);
}

bool operator==(const TensorOperator& a, const TensorOperator& b) {
  return a.dim_ == b.dim_ && a.power_ == b.power_ && a.matrix_ == b.matrix_;
}

std::size_t tensor_size(std::size_t dim, std::size_t power, std::size_t cap) {
  std::size_t size = 1;
  for (std::size_t k = 0; k < power; ++k) {
    if (dim != 0 && size > cap / dim) {
      throw std::length_error("tensor space N^k = " + std::to_string(dim) + "^" + std::to_string(power) +
                              " exceeds cap " + std::to_string(cap));
    }
    size *= dim;
  }
  if (size > cap) throw std::length_error("tensor space exceeds cap " + std::to_string(cap));
  return size;
}

TensorOperator permutation_operator(std::size_t dim) {
  if (dim < 1) throw std::invalid_argument("permutation_operator: N must be positive");
  RationalMatrix m(dim * dim, dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(j * dim + i, i * dim + j) = 1;
  return TensorOperator(dim, 2, std::move(m));
}

TensorOperator yang_r(const Rational& u, std::size_t dim) {
  if (sgn(u) == 0) throw std::invalid_argument("yang_r: u = 0 is a pole");
  TensorOperator p = permutation_operator(dim);
  p *= Rational(-1 / u);
  return TensorOperator::identity(dim, 2) + p;
}

TensorOperator embed(const TensorOperator& op, std::size_t a, std::size_t b, std::size_t power) {
  if (op.power() != 2) throw std::invalid_argument("embed: operator must act on two tensor factors");
  if (a == b || a < 1 || b < 1 || a > power || b > power) {
    throw std::invalid_argument("embed: positions (" + std::to_string(a) + "," + std::to_string(b) +
                                ") invalid for power " + std::to_string(power));
  }
  const std::size_t dim = op.dim();
  const std::size_t size = tensor_size(dim, power, static_cast<std::size_t>(-1));
  RationalMatrix m(size, size);
  for (std::size_t col = 0; col < size; ++col) {
    std::vector<std::size_t> digits = digits_of(col, dim, power);
    const std::size_t local_col = digits[a - 1] * dim + digits[b - 1];
    for (std::size_t x = 0; x < dim; ++x)
      for (std::size_t y = 0; y < dim; ++y) {
        const Rational& entry = op.matrix()(x * dim + y, local_col);
        if (sgn(entry) == 0) continue;
        std::vector<std::size_t> out = digits;
        out[a - 1] = x;
        out[b - 1] = y;
        m(index_of(out, dim), col) = entry;
      }
  }
  return TensorOperator(dim, power, std::move(m));
}

CheckReport ybe_check(const Rational& u, const Rational& v, std::size_t dim) {
  if (sgn(u) == 0 || sgn(v) == 0 || sgn(u + v) == 0) throw std::invalid_argument("ybe_check: u, v and u+v must be nonzero");
  CheckReport report;
  bool ok = satisfies_ybe([dim](const Rational& x) { return yang_r(x, dim); }, u, v);
  report.add("ybe N=" + std::to_string(dim) + " " + pair_text(u, v), ok, ok ? "" : "R12 R13 R23 != R23 R13 R12");
  return report;
}

TensorOperator schur_weyl_image(const GroupAlgebraElement& a, std::size_t dim, std::size_t cap) {
  const std::size_t n = a.degree();
  const std::size_t size = tensor_size(dim, n, cap);
  // place[k]: weight of tensor position k in the flat index.
  std::vector<std::size_t> place(n);
  for (std::size_t k = n, w = 1; k-- > 0; w *= dim) place[k] = w;
  RationalMatrix m(size, size);
  std::vector<std::size_t> digits;
  for (std::size_t col = 0; col < size; ++col) {
    digits = digits_of(col, dim, n);
    for (const Term& t : a.terms()) {
      std::size_t row = 0;
      for (std::size_t k = 0; k < n; ++k) row += digits[k] * place[static_cast<std::size_t>(t.perm(static_cast<int>(k + 1)) - 1)];
      m(row, col) += t.coeff;
    }
  }
  return TensorOperator(dim, n, std::move(m));
}

namespace {

// acc <- acc * R_ij(u) with R_ij(u) = 1 - P_ij/u. P_ij swaps columns in pairs, so
// each pair is updated in place.
void multiply_by_r_right(RationalMatrix& acc, std::size_t i, std::size_t j, const Rational& u, std::size_t dim,
                         std::size_t power) {
  std::size_t wi = 1, wj = 1;
  for (std::size_t k = power; k > i; --k) wi *= dim;
  for (std::size_t k = power; k > j; --k) wj *= dim;
  const Rational inv = 1 / u;
  const Rational fixed_scale = 1 - inv;
  Rational a, b;
  for (std::size_t col = 0; col < acc.cols(); ++col) {
    const std::size_t di = (col / wi) % dim;
    const std::size_t dj = (col / wj) % dim;
    const std::size_t partner = col - di * wi - dj * wj + dj * wi + di * wj;
    if (partner < col) continue;
    for (std::size_t r = 0; r < acc.rows(); ++r) {
      if (partner == col) {
        if (sgn(acc(r, col)) != 0) acc(r, col) *= fixed_scale;
        continue;
      }
      if (sgn(acc(r, col)) == 0 && sgn(acc(r, partner)) == 0) continue;
      a = acc(r, col);
      b = acc(r, partner);
      acc(r, col) -= b * inv;
      acc(r, partner) -= a * inv;
    }
  }
}

}  // namespace

CheckReport fused_projector_check(const StandardTableau& t, std::size_t dim, std::size_t cap) {
  CheckReport report;
  const int n = t.size();
  const auto nn = static_cast<std::size_t>(n);
  const std::string name = "fused_projector T=" + t.to_string() + " N=" + std::to_string(dim);
  const TensorOperator image = schur_weyl_image(evaluate_fusion(t), dim, cap);

  const std::vector<int> c = t.contents();
  bool distinct = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) distinct = distinct && c[i] != c[j];
  if (distinct) {
    RationalMatrix product = RationalMatrix::identity(image.size());
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        multiply_by_r_right(product, static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                            Rational(c[i - 1] - c[j - 1]), dim, nn);
    bool ok = product == image.matrix();
    report.add(name + " r-matrix product", ok, ok ? "" : "image of Phi_T differs from prod R_ij(c_i - c_j)");
  }

  const Rational hooks(mpz_class(std::to_string(hook_product(t.shape()))));
  const RationalMatrix square = image.matrix() * image.matrix();
  bool quasi_idempotent = true;
  for (std::size_t r = 0; r < square.rows() && quasi_idempotent; ++r)
    for (std::size_t col = 0; col < square.cols() && quasi_idempotent; ++col)
      quasi_idempotent = square(r, col) == hooks * image.matrix()(r, col);
  report.add(name + " quasi-idempotent", quasi_idempotent, quasi_idempotent ? "" : "image^2 != (n!/f) image");
  return report;
}

RationalMatrix symmetric_square_basis(std::size_t dim) {
  TensorOperator sym = TensorOperator::identity(dim, 2) + permutation_operator(dim);
  return column_basis(sym.matrix());
}

TensorOperator fused_operator_rw(const Rational& u, std::size_t dim) {
  if (sgn(u) == 0 || u == 1 || u == -1) throw std::invalid_argument("fused_operator_rw: u must avoid 0 and +-1");
  // Copy 0 -> position 1, copy 1 -> 2, copy 2 -> 3, copy 3 -> 4.
  return embed(yang_r(u + 1, dim), 2, 3, 4) * embed(yang_r(u, dim), 2, 4, 4) * embed(yang_r(u, dim), 1, 3, 4) *
         embed(yang_r(u - 1, dim), 1, 4, 4);
}

TensorOperator fused_r_matrix(const Rational& u, std::size_t dim) {
  const RationalMatrix w = symmetric_square_basis(dim);
  const RationalMatrix ww = kron(w, w);
  const RationalMatrix image = fused_operator_rw(u, dim).matrix() * ww;
  return TensorOperator(w.cols(), 2, solve_in_basis(ww, image));
}

CheckReport fused_rw_check(const Rational& u, std::size_t dim,
                           const std::vector<std::pair<Rational, Rational>>& ybe_pairs) {
  if (sgn(u) == 0 || u == 1 || u == -1) throw std::invalid_argument("fused_rw_check: u must avoid 0 and +-1");
  CheckReport report;
  const std::string suffix = " N=" + std::to_string(dim) + " u=" + to_string(u);

  const RationalMatrix w = symmetric_square_basis(dim);
  const RationalMatrix v_w = kron(RationalMatrix::identity(dim), w);
  const TensorOperator two_step = embed(yang_r(u, dim), 1, 2, 3) * embed(yang_r(u - 1, dim), 1, 3, 3);
  bool vw_ok = columns_in_span(v_w, two_step.matrix() * v_w);
  report.add("fused_rw V(x)W invariance" + suffix, vw_ok, vw_ok ? "" : "R12(u) R13(u-1) leaves V (x) W");

  const RationalMatrix ww = kron(w, w);
  bool ww_ok = columns_in_span(ww, fused_operator_rw(u, dim).matrix() * ww);
  report.add("fused_rw W(x)W invariance" + suffix, ww_ok, ww_ok ? "" : "R_W(u) leaves W (x) W");

  for (const auto& [x, y] : ybe_pairs) {
    for (const Rational& p : {x, y, Rational(x + y)}) {
      if (sgn(p) == 0 || p == 1 || p == -1) throw std::invalid_argument("fused_rw_check: YBE parameters must avoid 0 and +-1");
    }
    bool ok = satisfies_ybe([dim](const Rational& s) { return fused_r_matrix(s, dim); }, x, y);
    report.add("fused_rw restricted ybe N=" + std::to_string(dim) + " " + pair_text(x, y), ok,
               ok ? "" : "restricted R_W fails the YBE");
  }
  return report;
}

Rational weyl_dimension(const Partition& lambda, std::size_t dim) {
  const int n = static_cast<int>(dim);
  if (lambda.length() > n) return 0;
  Rational d = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) d *= make_rational(lambda.row(i) - lambda.row(j) + j - i, j - i);
  return d;
}

}  // namespace symfuse
