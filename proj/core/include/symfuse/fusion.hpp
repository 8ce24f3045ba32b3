#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "symfuse/check_report.hpp"
#include "symfuse/group_algebra.hpp"
#include "symfuse/young.hpp"

namespace symfuse {

/// Raised when a (u - c_k) factor cannot be cancelled during consecutive evaluation.
class FusionSingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// phi_ij(u, v) = 1 - (i j)/(u - v) in Q[S_n]. Throws std::invalid_argument if u == v.
GroupAlgebraElement fusion_factor(int i, int j, const Rational& u, const Rational& v, std::size_t n);

/// Ordered product of phi_ij(u_i, u_j) over pairs i < j in reverse lexicographic
/// order: (i1, j1) precedes (i2, j2) iff j1 < j2, or j1 == j2 and i1 < i2.
/// Throws std::invalid_argument on coincident assignments.
GroupAlgebraElement fusion_product_generic(const std::vector<Rational>& u);

/// Same product with pairs in direct lexicographic order.
GroupAlgebraElement fusion_product_lex(const std::vector<Rational>& u);

CheckReport ordering_invariance_check(const std::vector<Rational>& u);

struct FusionStep {
  int k = 0;
  int multiplicity = 0;            // number of (u - c_k) factors cancelled
  Rational denominator_value;      // reduced scalar denominator at u = c_k
  std::size_t numerator_terms = 0; // group-algebra terms in N_k mod (u - c_k)^(m+1)
  std::size_t value_terms = 0;     // terms in the value after step k
};

struct FusionResult {
  GroupAlgebraElement value;                      // Phi_T
  std::vector<FusionStep> steps;                  // one per k = 1..n
  std::vector<GroupAlgebraElement> intermediates; // value after step k, in degree n
};

/// Consecutive evaluation u_1 = c_1, ..., u_n = c_n of the ordered product.
///
/// Step k forms N_k(u) = A_{k-1} prod_{i<k} ((c_i - u) - (i k)) and
/// D_k(u) = prod_{i<k} (c_i - u), cancels every (u - c_k) factor of D_k from
/// N_k by division, and sets A_k = N_k(c_k)/D_k(c_k). N_k is expanded around
/// u = c_k and truncated above the power that the divisions can reach.
/// Throws FusionSingularityError if a division leaves a nonzero remainder.
FusionResult evaluate_fusion_traced(const StandardTableau& t);
GroupAlgebraElement evaluate_fusion(const StandardTableau& t);

/// Cleared identity at a point u0:
///   Phi_U prod_{i<n} phi_in(c_i, u0) (1 - X_n/u0) = prod_{i<n} (1 - 1/(u0 - c_i)^2) Phi_U,
/// with U = T minus n. Throws std::invalid_argument unless u0 avoids 0, c_1..c_{n-1}
/// and the contents of cells addable to sh(U).
CheckReport phiupr_identity_check(const StandardTableau& t, const Rational& u0);

/// Phi_U phi_{m,r}(-c_m, -u0) ... phi_{1,r}(-c_1, -u0) = Phi_U (1 - ((1 r) + ... + (m r))/u0)
/// in Q[S_r], where m = |U| and r > m.
CheckReport phiuinge_identity_check(const StandardTableau& u, int r, const Rational& u0);

/// Value at u = c_n of prod_{i<n} (1 - 1/(u - c_i)^2) * u/(u - c_n), with the
/// removable singularity cancelled exactly. `contents` holds c_1..c_n.
/// Throws std::invalid_argument unless mu -> lambda and |contents| == |lambda|.
Rational scalar_prefactor(const Partition& mu, const Partition& lambda, const std::vector<int>& contents);

}  // namespace symfuse
