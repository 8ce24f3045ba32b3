#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "symfuse/group_algebra.hpp"
#include "symfuse/rational.hpp"

namespace symfuse {

/// Polynomial in u with rational coefficients; coeffs()[k] multiplies u^k.
class ScalarPolynomial {
 public:
  ScalarPolynomial() = default;
  explicit ScalarPolynomial(std::vector<Rational> coeffs);

  static ScalarPolynomial constant(const Rational& c);
  /// a*u + b.
  static ScalarPolynomial linear(const Rational& a, const Rational& b);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational operator()(const Rational& u) const;

  /// Multiplicity of u = c as a root; throws std::domain_error for the zero polynomial.
  int root_multiplicity(const Rational& c) const;

  /// P(u) = (u - c) Q(u) + R.
  std::pair<ScalarPolynomial, Rational> divide_linear(const Rational& c) const;

  friend ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b);
  friend ScalarPolynomial operator+(const ScalarPolynomial& a, const ScalarPolynomial& b);
  friend bool operator==(const ScalarPolynomial&, const ScalarPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Polynomial in u whose coefficients lie in Q[S_n].
class GAPolynomial {
 public:
  explicit GAPolynomial(std::size_t degree) : degree_(degree) {}
  GAPolynomial(std::size_t degree, std::vector<GroupAlgebraElement> coeffs);

  static GAPolynomial constant(const GroupAlgebraElement& a);
  /// a*u + b.
  static GAPolynomial linear(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

  std::size_t group_degree() const { return degree_; }
  const std::vector<GroupAlgebraElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree in u; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Total number of group-algebra terms over all coefficients.
  std::size_t term_count() const;

  /// Horner evaluation at u = u0.
  GroupAlgebraElement operator()(const Rational& u0) const;

  /// P(u) = (u - c) Q(u) + R by synthetic division over Q[S_n]; R is constant in u.
  std::pair<GAPolynomial, GroupAlgebraElement> divide_linear(const Rational& c) const;

  friend GAPolynomial operator+(const GAPolynomial& a, const GAPolynomial& b);
  friend GAPolynomial operator-(const GAPolynomial& a, const GAPolynomial& b);
  /// Product in Q[S_n][u]; u is central, so only the group-algebra factors keep their order.
  friend GAPolynomial operator*(const GAPolynomial& a, const GAPolynomial& b);
  friend GAPolynomial operator*(const GroupAlgebraElement& a, const GAPolynomial& p);
  friend GAPolynomial operator*(const GAPolynomial& p, const GroupAlgebraElement& a);
  friend GAPolynomial operator*(const ScalarPolynomial& s, const GAPolynomial& p);
  friend bool operator==(const GAPolynomial&, const GAPolynomial&) = default;

 private:
  void trim();
  std::vector<GroupAlgebraElement> coeffs_;
  std::size_t degree_ = 0;
};

std::pair<GAPolynomial, GroupAlgebraElement> poly_divide_linear(const GAPolynomial& p, const Rational& c);
GroupAlgebraElement poly_eval(const GAPolynomial& p, const Rational& u0);

}  // namespace symfuse
