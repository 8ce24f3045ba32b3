#include "symfuse/permutation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "symfuse/young.hpp"

namespace symfuse {

namespace {

void check_degree(std::size_t degree) {
  if (degree > Permutation::kMaxDegree) {
    throw std::invalid_argument("permutation degree " + std::to_string(degree) + " exceeds " +
                                std::to_string(Permutation::kMaxDegree));
  }
}

}  // namespace

Permutation::Permutation(std::size_t degree) {
  check_degree(degree);
  degree_ = static_cast<std::uint8_t>(degree);
  for (std::size_t k = 0; k < degree; ++k) images_[k] = static_cast<std::uint8_t>(k);
}

Permutation Permutation::from_images(std::span<const int> images) {
  check_degree(images.size());
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(images.size());
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t k = 0; k < images.size(); ++k) {
    int v = images[k];
    if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1]) {
      throw std::invalid_argument("images do not form a permutation of 1.." +
                                  std::to_string(images.size()));
    }
    seen[v - 1] = true;
    p.images_[k] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::from_images(std::initializer_list<int> images) {
  return from_images(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  Permutation result(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("trailing characters after 'e'");
    return result;
  }
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos == text.size()) throw std::invalid_argument("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw std::invalid_argument("unexpected character in cycle notation: " + std::string(text));
      }
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      if (v < 1 || v > static_cast<int>(degree)) {
        throw std::invalid_argument("point " + std::to_string(v) + " out of range for degree " +
                                    std::to_string(degree));
      }
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end()) {
        throw std::invalid_argument("repeated point in cycle: " + std::string(text));
      }
      cycle.push_back(v);
    }
    // Cycles compose right to left, matching the group law.
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    result = compose(result, from_images(img));
  }
  return result;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(degree_);
  for (std::size_t k = 0; k < degree_; ++k) out[k] = images_[k] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < degree_; ++k)
    if (images_[k] != k) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.degree_ = degree_;
  for (std::size_t k = 0; k < degree_; ++k) r.images_[images_[k]] = static_cast<std::uint8_t>(k);
  return r;
}

Permutation Permutation::embed(std::size_t degree) const {
  if (degree < degree_) throw std::invalid_argument("cannot embed into a smaller degree");
  check_degree(degree);
  Permutation r = *this;
  for (std::size_t k = degree_; k < degree; ++k) r.images_[k] = static_cast<std::uint8_t>(k);
  r.degree_ = static_cast<std::uint8_t>(degree);
  return r;
}

std::uint64_t Permutation::rank() const {
  // Lehmer code; rank order coincides with lexicographic one-line order.
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (std::size_t k = 0; k < degree_; ++k) {
    std::uint32_t below = used & ((1u << images_[k]) - 1u);
    std::uint64_t smaller_unused = images_[k] - static_cast<std::uint64_t>(std::popcount(below));
    r = r * (degree_ - k) + smaller_unused;
    used |= 1u << images_[k];
  }
  return r;
}

Permutation Permutation::unrank(std::uint64_t rank, std::size_t degree) {
  check_degree(degree);
  std::vector<int> digits(degree);
  for (std::size_t k = degree; k-- > 0;) {
    std::uint64_t base = degree - k;
    digits[k] = static_cast<int>(rank % base);
    rank /= base;
  }
  if (rank != 0) throw std::invalid_argument("rank out of range");
  std::vector<int> pool(degree);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> img(degree);
  for (std::size_t k = 0; k < degree; ++k) {
    img[k] = pool[digits[k]];
    pool.erase(pool.begin() + digits[k]);
  }
  return from_images(img);
}

std::string Permutation::to_string() const {
  if (is_identity()) return "e";
  std::ostringstream out;
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t start = 0; start < degree_; ++start) {
    if (seen[start] || images_[start] == start) continue;
    out << '(';
    std::size_t k = start;
    bool first = true;
    while (!seen[k]) {
      seen[k] = true;
      if (!first) out << ' ';
      out << k + 1;
      first = false;
      k = images_[k];
    }
    out << ')';
  }
  return out.str();
}

std::size_t Permutation::hash() const {
  std::size_t h = degree_;
  for (std::size_t k = 0; k < degree_; ++k) h = h * 31 + images_[k];
  return h;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  }
  Permutation r;
  r.degree_ = p.degree_;
  for (std::size_t k = 0; k < p.degree_; ++k) r.images_[k] = p.images_[q.images_[k]];
  return r;
}

Permutation transposition(int i, int j, std::size_t n) {
  if (i < 1 || j <= i || j > static_cast<int>(n)) {
    throw std::invalid_argument("transposition requires 1 <= i < j <= n, got (" + std::to_string(i) +
                                " " + std::to_string(j) + ") in degree " + std::to_string(n));
  }
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::swap(img[i - 1], img[j - 1]);
  return Permutation::from_images(img);
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  std::vector<bool> seen(p.degree() + 1, false);
  for (int start = 1; start <= static_cast<int>(p.degree()); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int k = start; !seen[k]; k = p(k)) {
      seen[k] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

std::vector<Permutation> all_permutations(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw std::length_error("all_permutations: degree " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
  }
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace symfuse
