#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symfuse {

class Partition;

/// Element of S_n in one-line notation: images()[k-1] is the image of k.
///
/// Group law: compose(p, q) applies q first, then p, i.e. (p*q)(k) = p(q(k)).
/// Every product in the library (group algebra, fusion, tensor action) uses
/// this convention.
class Permutation {
 public:
  static constexpr std::size_t kMaxDegree = 16;

  Permutation() = default;  // identity of S_0
  explicit Permutation(std::size_t degree);  // identity of S_degree

  /// Throws std::invalid_argument unless `images` is a bijection of 1..n.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images);

  /// Parses cycle notation such as "(1 2)(3 4)"; "e" is the identity.
  /// Points not mentioned are fixed. Throws std::invalid_argument.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return degree_; }

  /// Image of the point k (1-based).
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)] + 1; }

  std::vector<int> images() const;
  bool is_identity() const;
  Permutation inverse() const;

  /// Same permutation regarded in S_degree, extra points fixed.
  Permutation embed(std::size_t degree) const;

  /// Lexicographic rank of the one-line form in 0..n!-1.
  std::uint64_t rank() const;
  static Permutation unrank(std::uint64_t rank, std::size_t degree);

  /// Cycle notation with fixed points omitted; "e" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.degree_ == b.degree_ && a.images_ == b.images_;
  }
  /// Canonical order: by degree, then lexicographic in one-line form.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.images_ <=> b.images_;
  }

  std::size_t hash() const;

  friend Permutation compose(const Permutation& p, const Permutation& q);

 private:
  std::array<std::uint8_t, kMaxDegree> images_{};  // 0-based images
  std::uint8_t degree_ = 0;
};

/// p after q. Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// The transposition (i j) in S_n, 1 <= i < j <= n.
Permutation transposition(int i, int j, std::size_t n);

/// Cycle lengths sorted decreasingly (fixed points included as 1-cycles).
Partition cycle_type(const Permutation& p);

/// Default cap for all_permutations.
inline constexpr std::size_t kDefaultPermutationCap = 8;

/// All n! permutations in lexicographic (rank) order. Throws std::length_error if n > cap.
std::vector<Permutation> all_permutations(std::size_t n, std::size_t cap = kDefaultPermutationCap);

std::uint64_t factorial(std::size_t n);

}  // namespace symfuse

template <>
struct std::hash<symfuse::Permutation> {
  std::size_t operator()(const symfuse::Permutation& p) const noexcept { return p.hash(); }
};
