#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "symfuse/symfuse.hpp"

namespace symfuse::oracle {

using OneLine = std::vector<int>;
using NaiveElement = std::map<OneLine, Rational>;

inline NaiveElement to_naive(const GroupAlgebraElement& a) {
  NaiveElement out;
  for (const Term& t : a.terms()) out[t.perm.images()] = t.coeff;
  return out;
}

/// Double loop over terms; composition evaluated pointwise as p(q(k)).
inline NaiveElement naive_multiply(const NaiveElement& a, const NaiveElement& b) {
  NaiveElement out;
  for (const auto& [p, x] : a)
    for (const auto& [q, y] : b) {
      OneLine r(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) r[k] = p[static_cast<std::size_t>(q[k] - 1)];
      out[r] += x * y;
    }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Standard tableaux counted by filtering every bijective filling of the diagram.
inline std::size_t brute_force_tableau_count(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<int> fill(static_cast<std::size_t>(n));
  std::iota(fill.begin(), fill.end(), 1);
  std::size_t count = 0;
  do {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int r = 1; r <= lambda.length(); ++r) {
      rows.emplace_back(fill.begin() + static_cast<long>(pos), fill.begin() + static_cast<long>(pos + lambda.row(r)));
      pos += static_cast<std::size_t>(lambda.row(r));
    }
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r)
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c > 0 && rows[r][c - 1] > rows[r][c]) ok = false;
        if (r > 0 && rows[r - 1][c] > rows[r][c]) ok = false;
      }
    count += ok ? 1 : 0;
  } while (std::next_permutation(fill.begin(), fill.end()));
  return count;
}

/// Hook-content formula for dim of the GL_N irreducible: prod over cells (N + content)/hook.
inline Rational hook_content_dimension(const Partition& lambda, long dim) {
  Rational d = 1;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.row(r); ++c) {
      int arm = lambda.row(r) - c;
      int leg = 0;
      while (lambda.row(r + leg + 1) >= c) ++leg;
      d *= make_rational(dim + (c - r), arm + leg + 1);
    }
  return d;
}

/// Weyl's product over row pairs i < j <= N of (l_i - l_j + j - i)/(j - i).
inline Rational weyl_product_dimension(const Partition& lambda, long dim) {
  if (lambda.length() > dim) return 0;
  Rational d = 1;
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j) d *= make_rational(lambda.row(i) - lambda.row(j) + j - i, j - i);
  return d;
}

/// Character value by stripping rim hooks of the first part of rho from the diagram.
/// Every sub-diagram mu of the right size is tried; lambda/mu must be a connected
/// skew shape with no 2x2 block. Sign is (-1)^(rows of the hook - 1).
inline long long rim_hook_character(const std::vector<int>& lambda, std::vector<int> rho) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  const int r = rho.front();
  rho.erase(rho.begin());
  long long total = 0;
  // Enumerate mu with mu_i <= lambda_i, weakly decreasing, |mu| = |lambda| - r.
  const int target = std::accumulate(lambda.begin(), lambda.end(), 0) - r;
  if (target < 0) return 0;
  std::vector<int> mu(lambda.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == lambda.size()) {
      if (remaining != 0) return;
      // Skew cells per row: columns mu_i+1 .. lambda_i.
      int first = -1, last = -1;
      for (std::size_t k = 0; k < lambda.size(); ++k)
        if (lambda[k] > mu[k]) {
          if (first < 0) first = static_cast<int>(k);
          last = static_cast<int>(k);
        }
      if (first < 0) return;
      for (int k = first; k <= last; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        if (lambda[kk] == mu[kk]) return;  // disconnected
        if (k < last) {
          // rows k and k+1 must overlap in exactly one column to stay connected without a 2x2 block
          if (lambda[kk + 1] - 1 != mu[kk]) return;
        }
      }
      std::vector<int> rest;
      for (int v : mu)
        if (v > 0) rest.push_back(v);
      const long long sign = (last - first) % 2 == 0 ? 1 : -1;
      total += sign * rim_hook_character(rest, rho);
      return;
    }
    const int cap = std::min(lambda[i], i == 0 ? lambda[0] : mu[i - 1]);
    for (int v = std::min(cap, remaining); v >= 0; --v) {
      mu[i] = v;
      rec(i + 1, remaining - v);
    }
    mu[i] = 0;
  };
  rec(0, target);
  return total;
}

inline long long rim_hook_character(const Partition& lambda, const Partition& rho) {
  return rim_hook_character(lambda.parts(), rho.parts());
}

/// Random rational p/q with |p| <= max_num, 1 <= q <= max_den.
inline Rational random_rational(std::mt19937_64& rng, int max_num = 20, int max_den = 7) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

inline GroupAlgebraElement random_element(std::mt19937_64& rng, std::size_t n, std::size_t terms) {
  auto perms = all_permutations(n);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k) ts.push_back({perms[pick(rng)], random_rational(rng, 5, 4)});
  return GroupAlgebraElement::from_terms(n, std::move(ts));
}

}  // namespace symfuse::oracle
