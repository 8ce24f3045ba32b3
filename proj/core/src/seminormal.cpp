#include "symfuse/seminormal.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace symfuse {

namespace {

using Matrix = std::vector<double>;  // row-major f x f

Matrix matmul(const Matrix& a, const Matrix& b, std::size_t f) {
  Matrix c(f * f, 0.0);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t k = 0; k < f; ++k) {
      const double aik = a[i * f + k];
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < f; ++j) c[i * f + j] += aik * b[k * f + j];
    }
  return c;
}

StandardTableau swap_entries(const StandardTableau& t, int i) {
  auto rows = t.rows();
  for (auto& row : rows)
    for (int& v : row) {
      if (v == i) v = i + 1;
      else if (v == i + 1) v = i;
    }
  return StandardTableau::from_rows(std::move(rows));
}

}  // namespace

double ApproxElement::max_abs_diff(const GroupAlgebraElement& exact) const {
  double worst = 0.0;
  for (const auto& [p, c] : coeffs) worst = std::max(worst, std::abs(c - exact.coefficient(p).get_d()));
  for (const Term& t : exact.terms()) {
    auto it = coeffs.find(t.perm);
    double approx = it == coeffs.end() ? 0.0 : it->second;
    worst = std::max(worst, std::abs(approx - t.coeff.get_d()));
  }
  return worst;
}

std::map<StandardTableau, ApproxElement> seminormal_oracle(const Partition& lambda) {
  const int n = lambda.size();
  if (n > 6) throw std::invalid_argument("seminormal_oracle: |lambda| must be at most 6");
  const auto nn = static_cast<std::size_t>(n);
  const std::vector<StandardTableau> tableaux = standard_tableaux(lambda);
  const std::size_t f = tableaux.size();
  std::map<StandardTableau, std::size_t> index;
  for (std::size_t k = 0; k < f; ++k) index[tableaux[k]] = k;

  std::vector<Matrix> generators;  // s_i, i = 1..n-1
  for (int i = 1; i < n; ++i) {
    Matrix g(f * f, 0.0);
    for (std::size_t k = 0; k < f; ++k) {
      const StandardTableau& t = tableaux[k];
      const double d = 1.0 / static_cast<double>(t.content(i + 1) - t.content(i));
      g[k * f + k] = d;  // column k is the image of v_T
      if (std::abs(d) < 1.0) {
        std::size_t other = index.at(swap_entries(t, i));
        g[other * f + k] = std::sqrt(1.0 - d * d);
      }
    }
    generators.push_back(std::move(g));
  }

  Matrix identity(f * f, 0.0);
  for (std::size_t k = 0; k < f; ++k) identity[k * f + k] = 1.0;
  std::unordered_map<Permutation, Matrix> rho;
  rho.emplace(Permutation(nn), identity);
  std::deque<Permutation> queue{Permutation(nn)};
  while (!queue.empty()) {
    Permutation p = queue.front();
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      Permutation q = compose(transposition(i, i + 1, nn), p);
      if (rho.count(q)) continue;
      rho.emplace(q, matmul(generators[i - 1], rho.at(p), f));
      queue.push_back(q);
    }
  }

  std::map<StandardTableau, ApproxElement> out;
  for (std::size_t k = 0; k < f; ++k) {
    ApproxElement e{nn, {}};
    for (const auto& [s, m] : rho) {
      const double value = m[k * f + k];
      if (value != 0.0) e.coeffs[s.inverse()] = value;
    }
    out.emplace(tableaux[k], std::move(e));
  }
  return out;
}

}  // namespace symfuse
