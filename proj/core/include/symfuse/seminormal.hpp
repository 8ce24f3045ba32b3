#pragma once

#include <map>
#include <vector>

#include "symfuse/group_algebra.hpp"
#include "symfuse/young.hpp"

namespace symfuse {

/// Floating-point group-algebra element, used only for oracle comparisons.
struct ApproxElement {
  std::size_t degree = 0;
  std::map<Permutation, double> coeffs;

  /// Largest |coefficient difference| against an exact element over the union of supports.
  double max_abs_diff(const GroupAlgebraElement& exact) const;
};

/// Young orthogonal form: the matrix of every s in S_n on V_lambda, built from
///   s_i v_T = d v_T + sqrt(1 - d^2) v_{s_i T},  d = 1/(c_{i+1} - c_i),
/// then Phi_T = sum_s (s v_T, v_T) s^{-1}. Requires |lambda| <= 6.
std::map<StandardTableau, ApproxElement> seminormal_oracle(const Partition& lambda);

}  // namespace symfuse
