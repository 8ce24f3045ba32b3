#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "symfuse/permutation.hpp"
#include "symfuse/rational.hpp"

namespace symfuse {

struct Term {
  Permutation perm;
  Rational coeff;
};

/// Element of Q[S_n]: a sparse combination of permutations.
///
/// Terms are kept sorted by the canonical permutation order with no zero
/// coefficients, so structural equality is algebraic equality.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;  // zero of Q[S_0]
  explicit GroupAlgebraElement(std::size_t degree) : degree_(degree) {}

  static GroupAlgebraElement identity(std::size_t degree);
  static GroupAlgebraElement scalar(std::size_t degree, const Rational& value);
  static GroupAlgebraElement basis(const Permutation& p, const Rational& coeff = 1);
  /// Combines repeated permutations and drops zeros. Throws on degree mismatch.
  static GroupAlgebraElement from_terms(std::size_t degree, std::vector<Term> terms);
  /// Convenience: {{"e", "1"}, {"(1 2)", "-1/2"}}.
  static GroupAlgebraElement parse_terms(std::size_t degree,
                                         std::initializer_list<std::pair<const char*, const char*>> terms);

  std::size_t degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of p (zero when absent).
  Rational coefficient(const Permutation& p) const;

  /// Same element in Q[S_degree] via the natural inclusion.
  GroupAlgebraElement embed(std::size_t degree) const;

  /// Human-readable form, e.g. "1/2*e + 1/2*(1 2)"; "0" for zero.
  std::string to_string() const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const Rational& s);

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

 private:
  void require_same_degree(const GroupAlgebraElement& other, const char* op) const;

  std::vector<Term> terms_;
  std::size_t degree_ = 0;
};

GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b);
GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b);
GroupAlgebraElement operator-(GroupAlgebraElement a);
GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& s);
GroupAlgebraElement operator*(const Rational& s, GroupAlgebraElement a);
/// Ring product; throws std::invalid_argument on degree mismatch.
GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// Left-to-right product of the factors; identity of `degree` when empty.
GroupAlgebraElement product(std::size_t degree, const std::vector<GroupAlgebraElement>& factors);

}  // namespace symfuse
