#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "symfuse/group_algebra.hpp"
#include "symfuse/polynomial.hpp"

using namespace symfuse;

namespace {

GroupAlgebraElement el(std::size_t n, std::initializer_list<std::pair<const char*, const char*>> terms) {
  return GroupAlgebraElement::parse_terms(n, terms);
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(parse_rational(" 7 "), Rational(7));
  EXPECT_EQ(to_string(make_rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(4, 2)), "2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(GroupAlgebra, InvolutionProducts) {
  const auto plus = el(2, {{"e", "1"}, {"(1 2)", "1"}});
  const auto minus = el(2, {{"e", "1"}, {"(1 2)", "-1"}});
  EXPECT_TRUE((plus * minus).is_zero());
  EXPECT_EQ(plus * plus, plus * Rational(2));
}

TEST(GroupAlgebra, PartialFusionProductInS3) {
  // Frozen from a brute-force expansion with pointwise composition.
  const auto a = el(3, {{"e", "1"}, {"(1 2)", "1"}});
  const auto b = el(3, {{"e", "1"}, {"(1 3)", "-1"}});
  const auto c = el(3, {{"e", "1"}, {"(2 3)", "-1/2"}});
  const auto p = a * b * c;
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(p.coefficient(Permutation(3)), 1);
  const auto expected = el(3, {{"e", "1"},
                               {"(2 3)", "-1/2"},
                               {"(1 2)", "1"},
                               {"(1 2 3)", "-1/2"},
                               {"(1 3 2)", "-1/2"},
                               {"(1 3)", "-1/2"}});
  EXPECT_EQ(p, expected);
}

TEST(GroupAlgebra, NoZeroTermsAndCanonicalOrder) {
  auto a = el(3, {{"(1 2)", "1"}, {"e", "2"}, {"(1 2)", "-1"}});
  EXPECT_EQ(a.size(), 1u);
  auto b = el(3, {{"(1 3)", "1"}, {"e", "1"}, {"(2 3)", "1"}});
  for (std::size_t k = 1; k < b.size(); ++k) EXPECT_LT(b.terms()[k - 1].perm, b.terms()[k].perm);
  EXPECT_TRUE((b - b).is_zero());
  EXPECT_TRUE((b * Rational(0)).is_zero());
}

TEST(GroupAlgebra, DegreeMismatchThrows) {
  EXPECT_THROW(GroupAlgebraElement::identity(2) + GroupAlgebraElement::identity(3), std::invalid_argument);
  EXPECT_THROW(GroupAlgebraElement::identity(2) * GroupAlgebraElement::identity(3), std::invalid_argument);
  EXPECT_THROW(GroupAlgebraElement::from_terms(3, {{Permutation(2), Rational(1)}}), std::invalid_argument);
}

TEST(GroupAlgebra, TextForm) {
  EXPECT_EQ(el(2, {{"e", "1/2"}, {"(1 2)", "-1/2"}}).to_string(), "1/2 - 1/2*(1 2)");
  EXPECT_EQ(GroupAlgebraElement(3).to_string(), "0");
}

TEST(GroupAlgebraProperty, MultiplyMatchesNaiveDoubleLoop) {
  std::mt19937_64 rng(2024);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      auto a = oracle::random_element(rng, n, 1 + rng() % 12);
      auto b = oracle::random_element(rng, n, 1 + rng() % 12);
      EXPECT_EQ(oracle::to_naive(a * b), oracle::naive_multiply(oracle::to_naive(a), oracle::to_naive(b)));
    }
  }
  // Large operands take the dense accumulator path.
  auto a = oracle::random_element(rng, 5, 100);
  auto b = oracle::random_element(rng, 5, 100);
  EXPECT_EQ(oracle::to_naive(a * b), oracle::naive_multiply(oracle::to_naive(a), oracle::to_naive(b)));
}

TEST(GroupAlgebraProperty, RingAxioms) {
  std::mt19937_64 rng(99);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      auto a = oracle::random_element(rng, n, 6);
      auto b = oracle::random_element(rng, n, 6);
      auto c = oracle::random_element(rng, n, 6);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a + b) * c, a * c + b * c);
      EXPECT_EQ(a * GroupAlgebraElement::identity(n), a);
      EXPECT_EQ(a + b, b + a);
    }
  }
}

TEST(GAPolynomial, EvaluateConstantAndLinear) {
  const auto x2 = el(2, {{"(1 2)", "1"}});
  const auto constant = GAPolynomial::constant(x2);
  EXPECT_EQ(poly_eval(constant, make_rational(17, 3)), x2);
  const auto p = GAPolynomial::linear(GroupAlgebraElement::identity(2), -x2);  // u - X_2
  EXPECT_EQ(poly_eval(p, 1), el(2, {{"e", "1"}, {"(1 2)", "-1"}}));
}

TEST(GAPolynomial, DivideLinear) {
  std::mt19937_64 rng(5);
  const auto a = oracle::random_element(rng, 3, 4);
  const Rational c = make_rational(-3, 2);
  const auto p = GAPolynomial::linear(GroupAlgebraElement::identity(3), GroupAlgebraElement::scalar(3, -c)) *
                 GAPolynomial::constant(a);
  auto [q, r] = poly_divide_linear(p, c);
  EXPECT_EQ(q, GAPolynomial::constant(a));
  EXPECT_TRUE(r.is_zero());

  auto [q1, r1] = poly_divide_linear(GAPolynomial::constant(GroupAlgebraElement::identity(3)), c);
  EXPECT_TRUE(q1.is_zero());
  EXPECT_EQ(r1, GroupAlgebraElement::identity(3));
}

TEST(GAPolynomialProperty, DivisionReconstructsInput) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<GroupAlgebraElement> coeffs;
    for (std::size_t k = 0, deg = rng() % 5; k <= deg; ++k) coeffs.push_back(oracle::random_element(rng, n, 3));
    const GAPolynomial p(n, coeffs);
    const Rational c = oracle::random_rational(rng);
    auto [q, r] = poly_divide_linear(p, c);
    const auto linear = GAPolynomial::linear(GroupAlgebraElement::identity(n), GroupAlgebraElement::scalar(n, -c));
    EXPECT_EQ(linear * q + GAPolynomial::constant(r), p);
    EXPECT_EQ(r, poly_eval(p, c));
  }
}

TEST(ScalarPolynomial, RootsAndDivision) {
  // (u - 1)^2 (u + 2)
  const auto p = ScalarPolynomial::linear(1, -1) * ScalarPolynomial::linear(1, -1) * ScalarPolynomial::linear(1, 2);
  EXPECT_EQ(p.root_multiplicity(1), 2);
  EXPECT_EQ(p.root_multiplicity(-2), 1);
  EXPECT_EQ(p.root_multiplicity(0), 0);
  EXPECT_EQ(p(3), 20);
  auto [q, r] = p.divide_linear(-2);
  EXPECT_EQ(sgn(r), 0);
  EXPECT_EQ(q, ScalarPolynomial::linear(1, -1) * ScalarPolynomial::linear(1, -1));
  EXPECT_THROW(ScalarPolynomial().root_multiplicity(0), std::domain_error);
}
