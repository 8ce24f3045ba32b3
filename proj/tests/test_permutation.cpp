#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "symfuse/permutation.hpp"
#include "symfuse/young.hpp"

using namespace symfuse;

TEST(Permutation, CompositionConventionAppliesRightFactorFirst) {
  const Permutation p = transposition(1, 2, 3);
  const Permutation q = transposition(2, 3, 3);
  const Permutation pq = compose(p, q);
  // 1 -> 2 -> 3 -> 1
  EXPECT_EQ(pq(1), 2);
  EXPECT_EQ(pq(2), 3);
  EXPECT_EQ(pq(3), 1);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(pq(k), p(q(k)));
}

TEST(Permutation, IdentityAndInvolution) {
  const Permutation p = Permutation::from_images({3, 1, 2, 4});
  EXPECT_EQ(compose(Permutation(4), p), p);
  EXPECT_EQ(compose(p, Permutation(4)), p);
  const Permutation t = transposition(1, 2, 2);
  EXPECT_TRUE(compose(t, t).is_identity());
}

TEST(Permutation, DegreeMismatchThrows) {
  EXPECT_THROW(compose(Permutation(2), Permutation(3)), std::invalid_argument);
  EXPECT_EQ(compose(transposition(1, 2, 2).embed(3), Permutation(3)), transposition(1, 2, 3));
}

TEST(Permutation, Transposition) {
  EXPECT_EQ(transposition(1, 2, 2).images(), (std::vector<int>{2, 1}));
  EXPECT_EQ(transposition(1, 4, 4)(4), 1);
  EXPECT_EQ(cycle_type(transposition(2, 3, 4)), Partition({2, 1, 1}));
  EXPECT_THROW(transposition(2, 2, 3), std::invalid_argument);
  EXPECT_THROW(transposition(0, 1, 3), std::invalid_argument);
  EXPECT_THROW(transposition(1, 4, 3), std::invalid_argument);
}

TEST(Permutation, CycleType) {
  EXPECT_EQ(cycle_type(Permutation(4)), Partition({1, 1, 1, 1}));
  EXPECT_EQ(cycle_type(transposition(1, 2, 3)), Partition({2, 1}));
  EXPECT_EQ(cycle_type(compose(transposition(1, 2, 4), transposition(3, 4, 4))), Partition({2, 2}));
}

TEST(Permutation, AllPermutations) {
  EXPECT_EQ(all_permutations(1).size(), 1u);
  EXPECT_TRUE(all_permutations(1)[0].is_identity());
  EXPECT_EQ(all_permutations(3).size(), 6u);
  EXPECT_EQ(all_permutations(5).size(), 120u);
  EXPECT_THROW(all_permutations(9), std::length_error);
  EXPECT_EQ(all_permutations(9, 9).size(), 362880u);
}

TEST(Permutation, RankMatchesLexicographicOrder) {
  auto perms = all_permutations(5);
  for (std::size_t k = 0; k < perms.size(); ++k) {
    EXPECT_EQ(perms[k].rank(), k);
    EXPECT_EQ(Permutation::unrank(k, 5), perms[k]);
    if (k > 0) EXPECT_LT(perms[k - 1], perms[k]);
  }
}

TEST(Permutation, CycleNotationRoundTrip) {
  EXPECT_EQ(Permutation::parse("e", 3), Permutation(3));
  EXPECT_EQ(Permutation::parse("(1 2)(3 4)", 4).to_string(), "(1 2)(3 4)");
  EXPECT_EQ(Permutation::parse(" (1 2 3) ", 3).images(), (std::vector<int>{2, 3, 1}));
  // Product of cycles is read right to left.
  EXPECT_EQ(Permutation::parse("(1 2)(2 3)", 3), compose(transposition(1, 2, 3), transposition(2, 3, 3)));
  EXPECT_THROW(Permutation::parse("(1 5)", 4), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("(1 1)", 4), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("(1 2", 4), std::invalid_argument);
  for (const auto& p : all_permutations(5)) EXPECT_EQ(Permutation::parse(p.to_string(), 5), p);
}

TEST(Permutation, FromImagesRejectsNonBijection) {
  EXPECT_THROW(Permutation::from_images({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_images({0, 1}), std::invalid_argument);
}

TEST(PermutationProperty, GroupLawsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto perms = all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      const auto& a = perms[pick(rng)];
      const auto& b = perms[pick(rng)];
      const auto& c = perms[pick(rng)];
      EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
      EXPECT_TRUE(compose(a, a.inverse()).is_identity());
      EXPECT_TRUE(compose(a.inverse(), a).is_identity());
      EXPECT_EQ(cycle_type(compose(compose(b, a), b.inverse())), cycle_type(a));
    }
    for (int i = 1; i <= static_cast<int>(n); ++i)
      for (int j = i + 1; j <= static_cast<int>(n); ++j) EXPECT_TRUE(compose(transposition(i, j, n), transposition(i, j, n)).is_identity());
  }
}

TEST(PermutationProperty, EmbeddingPreservesProducts) {
  std::mt19937_64 rng(11);
  auto perms = all_permutations(4);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& a = perms[pick(rng)];
    const auto& b = perms[pick(rng)];
    EXPECT_EQ(compose(a, b).embed(6), compose(a.embed(6), b.embed(6)));
    EXPECT_EQ(a.embed(6)(5), 5);
  }
}
