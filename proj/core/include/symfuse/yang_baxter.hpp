#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "symfuse/check_report.hpp"
#include "symfuse/group_algebra.hpp"
#include "symfuse/rational_matrix.hpp"
#include "symfuse/young.hpp"

namespace symfuse {

/// Exact operator on V^{(x)k}, dim V = N. The basis vector e_{i_1} (x) ... (x) e_{i_k}
/// has index i_1 N^{k-1} + ... + i_k (0-based i's), so factor 1 is most significant.
class TensorOperator {
 public:
  TensorOperator() = default;
  /// Throws std::invalid_argument unless `matrix` is N^k x N^k.
  TensorOperator(std::size_t dim, std::size_t power, RationalMatrix matrix);

  static TensorOperator identity(std::size_t dim, std::size_t power);

  std::size_t dim() const { return dim_; }
  std::size_t power() const { return power_; }
  std::size_t size() const { return matrix_.rows(); }
  const RationalMatrix& matrix() const { return matrix_; }

  TensorOperator& operator*=(const Rational& s);
  friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b);
  friend TensorOperator operator+(const TensorOperator& a, const TensorOperator& b);
  friend TensorOperator operator-(const TensorOperator& a, const TensorOperator& b);
  friend bool operator==(const TensorOperator& a, const TensorOperator& b);

 private:
  std::size_t dim_ = 0;
  std::size_t power_ = 0;
  RationalMatrix matrix_;
};

/// Default bound on N^k for dense tensor operators.
inline constexpr std::size_t kDefaultTensorCap = 4096;

/// N^k, throwing std::length_error if it exceeds `cap`.
std::size_t tensor_size(std::size_t dim, std::size_t power, std::size_t cap = kDefaultTensorCap);

/// P(x (x) y) = y (x) x on V (x) V.
TensorOperator permutation_operator(std::size_t dim);

/// Yang R-matrix R(u) = 1 - P/u. Throws std::invalid_argument for u = 0.
TensorOperator yang_r(const Rational& u, std::size_t dim);

/// op acting on tensor factors a and b (1-based, a != b) of V^{(x)k}, identity elsewhere.
/// The first factor of op sits at position a, so embed(op, b, a) is op conjugated by the flip.
TensorOperator embed(const TensorOperator& op, std::size_t a, std::size_t b, std::size_t power);

/// R12(u) R13(u+v) R23(v) == R23(v) R13(u+v) R12(u) for the Yang R-matrix.
/// Throws std::invalid_argument if u, v or u+v is zero.
CheckReport ybe_check(const Rational& u, const Rational& v, std::size_t dim);

/// YBE for an arbitrary R(u) on W (x) W given as a callable, on W^{(x)3}.
template <class RMatrix>
bool satisfies_ybe(const RMatrix& r, const Rational& u, const Rational& v) {
  const TensorOperator ru = r(u);
  const TensorOperator ruv = r(u + v);
  const TensorOperator rv = r(v);
  const TensorOperator r12 = embed(ru, 1, 2, 3);
  const TensorOperator r13 = embed(ruv, 1, 3, 3);
  const TensorOperator r23 = embed(rv, 2, 3, 3);
  return r12 * r13 * r23 == r23 * r13 * r12;
}

/// Image of a group-algebra element under the action of S_n permuting tensor factors:
/// s sends the factor in position k to position s(k).
TensorOperator schur_weyl_image(const GroupAlgebraElement& a, std::size_t dim, std::size_t cap = kDefaultTensorCap);

/// For pairwise distinct contents: image of the fused Phi_T equals the lexicographically
/// ordered product of R_ij(c_i - c_j). For every T: image^2 == (n!/f_lambda) image.
CheckReport fused_projector_check(const StandardTableau& t, std::size_t dim, std::size_t cap = kDefaultTensorCap);

/// Matrix whose columns form a basis of the symmetric square W = (1 + P)(V (x) V).
RationalMatrix symmetric_square_basis(std::size_t dim);

/// The four-factor operator R12(u+1) R13(u) R02(u) R03(u-1) on V^{(x)4}; tensor
/// copies 0, 1, 2, 3 occupy positions 1, 2, 3, 4.
/// Throws std::invalid_argument for u in {0, 1, -1}.
TensorOperator fused_operator_rw(const Rational& u, std::size_t dim);

/// Restriction of fused_operator_rw(u) to W (x) W in the basis w_a (x) w_b built
/// from symmetric_square_basis. The result acts on a space with local dimension dim W.
TensorOperator fused_r_matrix(const Rational& u, std::size_t dim);

/// (a) R12(u) R13(u-1) preserves V (x) W; (b) R_W(u) preserves W (x) W;
/// (c) the restriction satisfies the YBE at each (u', v') in `ybe_pairs`.
CheckReport fused_rw_check(const Rational& u, std::size_t dim,
                           const std::vector<std::pair<Rational, Rational>>& ybe_pairs = {});

/// Dimension of the polynomial GL_N irreducible with highest weight lambda
/// (Weyl's product over pairs of rows); zero when lambda has more than N rows.
Rational weyl_dimension(const Partition& lambda, std::size_t dim);

}  // namespace symfuse
