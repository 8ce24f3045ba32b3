#include "symfuse/group_algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace symfuse {

namespace {

// Products whose degree has at most this many elements accumulate into a
// dense rank-indexed buffer instead of a hash map.
constexpr std::uint64_t kDenseAccumulatorLimit = 5040;

// When one side has at most this many terms, products are collected into a
// flat vector and combined by sorting.
constexpr std::size_t kSortMergeLimit = 4;

bool perm_less(const Term& a, const Term& b) { return a.perm < b.perm; }

void combine_sorted(std::vector<Term>& terms) {
  if (!std::is_sorted(terms.begin(), terms.end(), perm_less)) std::sort(terms.begin(), terms.end(), perm_less);
  std::size_t out = 0;
  for (std::size_t k = 0; k < terms.size();) {
    std::size_t j = k + 1;
    while (j < terms.size() && terms[j].perm == terms[k].perm) terms[k].coeff += terms[j++].coeff;
    if (sgn(terms[k].coeff) != 0) {
      if (out != k) terms[out] = std::move(terms[k]);
      ++out;
    }
    k = j;
  }
  terms.resize(out);
}

}  // namespace

GroupAlgebraElement GroupAlgebraElement::identity(std::size_t degree) { return scalar(degree, 1); }

GroupAlgebraElement GroupAlgebraElement::scalar(std::size_t degree, const Rational& value) {
  GroupAlgebraElement e(degree);
  if (sgn(value) != 0) e.terms_.push_back({Permutation(degree), value});
  return e;
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& p, const Rational& coeff) {
  GroupAlgebraElement e(p.degree());
  if (sgn(coeff) != 0) e.terms_.push_back({p, coeff});
  return e;
}

GroupAlgebraElement GroupAlgebraElement::from_terms(std::size_t degree, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.perm.degree() != degree) {
      throw std::invalid_argument("term " + t.perm.to_string() + " has degree " + std::to_string(t.perm.degree()) +
                                  ", expected " + std::to_string(degree));
    }
  }
  GroupAlgebraElement e(degree);
  combine_sorted(terms);
  e.terms_ = std::move(terms);
  return e;
}

GroupAlgebraElement GroupAlgebraElement::parse_terms(
    std::size_t degree, std::initializer_list<std::pair<const char*, const char*>> terms) {
  std::vector<Term> ts;
  for (const auto& [perm, coeff] : terms) ts.push_back({Permutation::parse(perm, degree), parse_rational(coeff)});
  return from_terms(degree, std::move(ts));
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const Term& t, const Permutation& key) { return t.perm < key; });
  if (it != terms_.end() && it->perm == p) return it->coeff;
  return 0;
}

GroupAlgebraElement GroupAlgebraElement::embed(std::size_t degree) const {
  if (degree == degree_) return *this;
  GroupAlgebraElement e(degree);
  e.terms_.reserve(terms_.size());
  // Appending fixed points preserves lexicographic order of one-line forms.
  for (const Term& t : terms_) e.terms_.push_back({t.perm.embed(degree), t.coeff});
  return e;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    Rational c = t.coeff;
    if (k == 0) {
      if (sgn(c) < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) c = -c;
    }
    if (t.perm.is_identity()) {
      out += symfuse::to_string(c);
    } else {
      if (c != 1) out += symfuse::to_string(c) + "*";
      out += t.perm.to_string();
    }
  }
  return out;
}

void GroupAlgebraElement::require_same_degree(const GroupAlgebraElement& other, const char* op) const {
  if (degree_ != other.degree_) {
    throw std::invalid_argument(std::string(op) + ": degree mismatch " + std::to_string(degree_) + " vs " +
                                std::to_string(other.degree_));
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  require_same_degree(other, "add");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->perm < b->perm)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->perm < a->perm) {
      merged.push_back(*b++);
    } else {
      Rational sum = a->coeff + b->coeff;
      if (sgn(sum) != 0) merged.push_back({a->perm, std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  return *this += -other;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= s;
  return *this;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].perm != b.terms_[k].perm || a.terms_[k].coeff != b.terms_[k].coeff) return false;
  }
  return true;
}

GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
GroupAlgebraElement operator-(GroupAlgebraElement a) { return a *= Rational(-1); }
GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& s) { return a *= s; }
GroupAlgebraElement operator*(const Rational& s, GroupAlgebraElement a) { return a *= s; }

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("multiply: degree mismatch " + std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()));
  }
  const std::size_t n = a.degree();
  if (a.is_zero() || b.is_zero()) return GroupAlgebraElement(n);
  if (b.size() == 1 && b.terms()[0].perm.is_identity()) return a * b.terms()[0].coeff;
  if (a.size() == 1 && a.terms()[0].perm.is_identity()) return b * a.terms()[0].coeff;

  const std::uint64_t group_order = factorial(n);
  const std::uint64_t work = static_cast<std::uint64_t>(a.size()) * b.size();
  std::vector<Term> out;
  Rational prod;
  if (group_order <= kDenseAccumulatorLimit && group_order <= 4 * work) {
    std::vector<Rational> acc(group_order);
    std::vector<bool> touched(group_order, false);
    for (const Term& x : a.terms()) {
      for (const Term& y : b.terms()) {
        std::uint64_t r = compose(x.perm, y.perm).rank();
        mpq_mul(prod.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
        acc[r] += prod;
        touched[r] = true;
      }
    }
    // Rank order is the canonical order, so the output is already sorted.
    for (std::uint64_t r = 0; r < group_order; ++r) {
      if (touched[r] && sgn(acc[r]) != 0) out.push_back({Permutation::unrank(r, n), std::move(acc[r])});
    }
  } else if (std::min(a.size(), b.size()) <= kSortMergeLimit) {
    out.reserve(static_cast<std::size_t>(work));
    for (const Term& x : a.terms()) {
      for (const Term& y : b.terms()) {
        out.push_back({compose(x.perm, y.perm), Rational()});
        mpq_mul(out.back().coeff.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
      }
    }
    combine_sorted(out);
  } else {
    std::unordered_map<Permutation, Rational> acc;
    acc.reserve(static_cast<std::size_t>(std::min(work, group_order)));
    for (const Term& x : a.terms()) {
      for (const Term& y : b.terms()) {
        mpq_mul(prod.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
        acc[compose(x.perm, y.perm)] += prod;
      }
    }
    out.reserve(acc.size());
    for (auto& [p, c] : acc)
      if (sgn(c) != 0) out.push_back({p, std::move(c)});
    std::sort(out.begin(), out.end(), perm_less);
  }
  return GroupAlgebraElement::from_terms(n, std::move(out));
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return multiply(a, b); }

GroupAlgebraElement product(std::size_t degree, const std::vector<GroupAlgebraElement>& factors) {
  GroupAlgebraElement acc = GroupAlgebraElement::identity(degree);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

}  // namespace symfuse
