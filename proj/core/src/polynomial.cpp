#include "symfuse/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace symfuse {

ScalarPolynomial::ScalarPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ScalarPolynomial ScalarPolynomial::constant(const Rational& c) { return ScalarPolynomial({c}); }

ScalarPolynomial ScalarPolynomial::linear(const Rational& a, const Rational& b) { return ScalarPolynomial({b, a}); }

void ScalarPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational ScalarPolynomial::operator()(const Rational& u) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

int ScalarPolynomial::root_multiplicity(const Rational& c) const {
  if (is_zero()) throw std::domain_error("root multiplicity of the zero polynomial");
  int m = 0;
  ScalarPolynomial p = *this;
  while (true) {
    auto [q, r] = p.divide_linear(c);
    if (sgn(r) != 0) return m;
    ++m;
    p = std::move(q);
  }
}

std::pair<ScalarPolynomial, Rational> ScalarPolynomial::divide_linear(const Rational& c) const {
  if (coeffs_.empty()) return {ScalarPolynomial(), Rational(0)};
  std::vector<Rational> q(coeffs_.size() - 1);
  Rational carry = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    carry = coeffs_[k] + carry * c;
    if (k > 0) q[k - 1] = carry;
  }
  return {ScalarPolynomial(std::move(q)), carry};
}

ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return ScalarPolynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ScalarPolynomial(std::move(out));
}

ScalarPolynomial operator+(const ScalarPolynomial& a, const ScalarPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return ScalarPolynomial(std::move(out));
}

GAPolynomial::GAPolynomial(std::size_t degree, std::vector<GroupAlgebraElement> coeffs)
    : coeffs_(std::move(coeffs)), degree_(degree) {
  for (const auto& c : coeffs_) {
    if (c.degree() != degree_) throw std::invalid_argument("GAPolynomial: coefficient degree mismatch");
  }
  trim();
}

GAPolynomial GAPolynomial::constant(const GroupAlgebraElement& a) { return GAPolynomial(a.degree(), {a}); }

GAPolynomial GAPolynomial::linear(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return GAPolynomial(a.degree(), {b, a});
}

void GAPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t GAPolynomial::term_count() const {
  std::size_t count = 0;
  for (const auto& c : coeffs_) count += c.size();
  return count;
}

GroupAlgebraElement GAPolynomial::operator()(const Rational& u0) const {
  GroupAlgebraElement acc(degree_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= u0;
    acc += *it;
  }
  return acc;
}

std::pair<GAPolynomial, GroupAlgebraElement> GAPolynomial::divide_linear(const Rational& c) const {
  if (coeffs_.empty()) return {GAPolynomial(degree_), GroupAlgebraElement(degree_)};
  std::vector<GroupAlgebraElement> q(coeffs_.size() - 1, GroupAlgebraElement(degree_));
  GroupAlgebraElement carry(degree_);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    carry *= c;
    carry += coeffs_[k];
    if (k > 0) q[k - 1] = carry;
  }
  return {GAPolynomial(degree_, std::move(q)), std::move(carry)};
}

GAPolynomial operator+(const GAPolynomial& a, const GAPolynomial& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("GAPolynomial add: degree mismatch");
  std::vector<GroupAlgebraElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()), GroupAlgebraElement(a.degree_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return GAPolynomial(a.degree_, std::move(out));
}

GAPolynomial operator-(const GAPolynomial& a, const GAPolynomial& b) {
  return a + ScalarPolynomial::constant(-1) * b;
}

GAPolynomial operator*(const GAPolynomial& a, const GAPolynomial& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("GAPolynomial multiply: degree mismatch");
  if (a.is_zero() || b.is_zero()) return GAPolynomial(a.degree_);
  std::vector<GroupAlgebraElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, GroupAlgebraElement(a.degree_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return GAPolynomial(a.degree_, std::move(out));
}

GAPolynomial operator*(const GroupAlgebraElement& a, const GAPolynomial& p) { return GAPolynomial::constant(a) * p; }

GAPolynomial operator*(const GAPolynomial& p, const GroupAlgebraElement& a) { return p * GAPolynomial::constant(a); }

GAPolynomial operator*(const ScalarPolynomial& s, const GAPolynomial& p) {
  if (s.is_zero() || p.is_zero()) return GAPolynomial(p.degree_);
  std::vector<GroupAlgebraElement> out(s.coeffs().size() + p.coeffs_.size() - 1, GroupAlgebraElement(p.degree_));
  for (std::size_t i = 0; i < s.coeffs().size(); ++i)
    for (std::size_t j = 0; j < p.coeffs_.size(); ++j) out[i + j] += p.coeffs_[j] * s.coeffs()[i];
  return GAPolynomial(p.degree_, std::move(out));
}

std::pair<GAPolynomial, GroupAlgebraElement> poly_divide_linear(const GAPolynomial& p, const Rational& c) {
  return p.divide_linear(c);
}

GroupAlgebraElement poly_eval(const GAPolynomial& p, const Rational& u0) { return p(u0); }

}  // namespace symfuse
