#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "symfuse/check_report.hpp"
#include "symfuse/group_algebra.hpp"
#include "symfuse/polynomial.hpp"
#include "symfuse/young.hpp"

namespace symfuse {

/// X_i = (1 i) + (2 i) + ... + (i-1 i) in Q[S_n]; X_1 = 0.
GroupAlgebraElement jm_element(int i, std::size_t n);

/// Diagonal matrix unit E_T from the Jucys-Murphy recurrence
///
///   E_T = E_U (X_n - a_1)...(X_n - a_k) / ((c - a_1)...(c - a_k)),
///
/// where U is T with n removed, c is the content of the cell holding n and
/// a_1..a_k are the contents of the other addable cells of sh(U). The base
/// case is E = 1 for the one-cell tableau (and for the empty tableau).
GroupAlgebraElement matrix_unit_murphy(const StandardTableau& t);

/// Phi_T = (n!/f_lambda) E_T, the diagonal matrix element of the irreducible representation.
GroupAlgebraElement matrix_element_murphy(const StandardTableau& t);

struct MatrixUnit {
  StandardTableau tableau;
  GroupAlgebraElement element;         // E_T
  GroupAlgebraElement matrix_element;  // Phi_T
};

MatrixUnit make_matrix_unit(const StandardTableau& t);

/// E_T for every standard tableau with n cells, built level by level so each
/// E_U is computed once.
std::map<StandardTableau, GroupAlgebraElement> all_matrix_units(int n);

/// Product of linear factors (X_n - a)/(c - a) over the addable contents a != c of mu.
GroupAlgebraElement murphy_factor(const Partition& mu, Cell added, std::size_t n);

/// H_{lambda,mu} from the contents of addable cells of mu and removable cells of lambda.
/// Throws std::invalid_argument unless mu -> lambda.
Rational hook_ratio(const Partition& lambda, const Partition& mu);

/// X_n == sum over all standard T with n cells of c_n(T) E_T.
CheckReport spectral_identity_check(int n);

/// Regularity of E_U (u - c)/(u - X_n) at u = c, using the spectral expansion
/// over U -> T' and removing the (u - c) factor by synthetic division; the
/// value must be E_T.
CheckReport regularity_check(const StandardTableau& t);

/// chi_lambda = sum_T Phi_T; the coefficient of s is chi_lambda(s).
GroupAlgebraElement character_element(const Partition& lambda);

/// Normalized-character recurrence chi^_lambda = sum_{mu -> lambda} chi^_mu * prod (X_n - a)/(c - a)
/// and its un-normalized form with the hook-ratio numerator/denominator split.
CheckReport character_recurrence_check(const Partition& lambda);

/// Murnaghan-Nakayama value chi_lambda at the class of cycle type rho.
/// Border-strip recursion on the diagram; independent of the group algebra.
long long murnaghan_nakayama(const Partition& lambda, const Partition& rho);

}  // namespace symfuse
