#include "symfuse/matrix_units.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace symfuse {

namespace {

// (X_n - a)
GroupAlgebraElement shifted_jm(int n, const Rational& a) {
  return jm_element(n, static_cast<std::size_t>(n)) - GroupAlgebraElement::scalar(static_cast<std::size_t>(n), a);
}

Rational to_rational(std::uint64_t v) { return Rational(mpz_class(std::to_string(v))); }

}  // namespace

GroupAlgebraElement jm_element(int i, std::size_t n) {
  if (i < 1 || i > static_cast<int>(n)) {
    throw std::invalid_argument("jm_element: index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  }
  std::vector<Term> terms;
  for (int j = 1; j < i; ++j) terms.push_back({transposition(j, i, n), Rational(1)});
  return GroupAlgebraElement::from_terms(n, std::move(terms));
}

GroupAlgebraElement murphy_factor(const Partition& mu, Cell added, std::size_t n) {
  const int c = added.content();
  GroupAlgebraElement acc = GroupAlgebraElement::identity(n);
  bool found = false;
  for (const Cell& cell : addable_cells(mu)) {
    if (cell == added) {
      found = true;
      continue;
    }
    const int a = cell.content();
    acc = acc * shifted_jm(static_cast<int>(n), a);
    acc *= make_rational(1, c - a);
  }
  if (!found) throw std::invalid_argument("murphy_factor: cell is not addable to (" + mu.to_string() + ")");
  return acc;
}

GroupAlgebraElement matrix_unit_murphy(const StandardTableau& t) {
  const int n = t.size();
  if (n <= 1) return GroupAlgebraElement::identity(static_cast<std::size_t>(n));
  StandardTableau u = t.branch_down();
  GroupAlgebraElement eu = matrix_unit_murphy(u).embed(static_cast<std::size_t>(n));
  return eu * murphy_factor(u.shape(), t.cell_of(n), static_cast<std::size_t>(n));
}

GroupAlgebraElement matrix_element_murphy(const StandardTableau& t) {
  return matrix_unit_murphy(t) * to_rational(hook_product(t.shape()));
}

MatrixUnit make_matrix_unit(const StandardTableau& t) {
  GroupAlgebraElement e = matrix_unit_murphy(t);
  GroupAlgebraElement phi = e * to_rational(hook_product(t.shape()));
  return {t, std::move(e), std::move(phi)};
}

std::map<StandardTableau, GroupAlgebraElement> all_matrix_units(int n) {
  if (n < 0) throw std::invalid_argument("all_matrix_units: negative n");
  std::map<StandardTableau, GroupAlgebraElement> level;
  level.emplace(StandardTableau(), GroupAlgebraElement::identity(0));
  for (int k = 1; k <= n; ++k) {
    std::map<StandardTableau, GroupAlgebraElement> next;
    for (const auto& [u, eu] : level) {
      GroupAlgebraElement lifted = eu.embed(static_cast<std::size_t>(k));
      for (const Cell& cell : addable_cells(u.shape())) {
        next.emplace(u.branch_up(cell), lifted * murphy_factor(u.shape(), cell, static_cast<std::size_t>(k)));
      }
    }
    level = std::move(next);
  }
  return level;
}

Rational hook_ratio(const Partition& lambda, const Partition& mu) {
  auto added = added_cell(mu, lambda);
  if (!added) {
    throw std::invalid_argument("hook_ratio: (" + mu.to_string() + ") -> (" + lambda.to_string() +
                                ") is not a one-cell addition");
  }
  const int c = added->content();
  // Both content lists are in decreasing order: entries before c give (x - c), after give (c - x).
  Rational num = 1;
  for (const Cell& a : addable_cells(mu)) {
    if (a == *added) continue;
    num *= a.content() > c ? a.content() - c : c - a.content();
  }
  Rational den = 1;
  for (const Cell& b : removable_cells(lambda)) {
    if (b == *added) continue;
    den *= b.content() > c ? b.content() - c : c - b.content();
  }
  return num / den;
}

CheckReport spectral_identity_check(int n) {
  CheckReport report;
  const auto nn = static_cast<std::size_t>(n);
  if (n < 1) {
    report.add("spectral_identity n=" + std::to_string(n), true, "empty sum");
    return report;
  }
  GroupAlgebraElement rhs(nn);
  for (const auto& [t, e] : all_matrix_units(n)) rhs += e * Rational(t.content(n));
  GroupAlgebraElement xn = jm_element(n, nn);
  bool ok = rhs == xn;
  report.add("spectral_identity n=" + std::to_string(n), ok,
             ok ? std::string("X_n = sum c_n(T) E_T") : "discrepancy: " + (xn - rhs).to_string());
  return report;
}

CheckReport regularity_check(const StandardTableau& t) {
  CheckReport report;
  const int n = t.size();
  const std::string name = "regularity T=" + t.to_string();
  if (n < 2) {
    report.add(name, true, "base case");
    return report;
  }
  const auto nn = static_cast<std::size_t>(n);
  const StandardTableau u = t.branch_down();
  const Rational c = t.content(n);

  // E_U (u - c)/(u - X_n) = sum_{U -> T'} E_T' (u - c)/(u - c_n(T')) over the common denominator.
  std::vector<std::pair<StandardTableau, GroupAlgebraElement>> branches;
  for (const StandardTableau& tp : branch_up_all(u)) branches.emplace_back(tp, matrix_unit_murphy(tp));

  GroupAlgebraElement branch_sum(nn);
  for (const auto& [tp, e] : branches) branch_sum += e;
  bool branching_ok = branch_sum == matrix_unit_murphy(u).embed(nn);
  report.add(name + " branching", branching_ok, branching_ok ? "" : "E_U != sum E_T'");

  ScalarPolynomial denominator = ScalarPolynomial::constant(1);
  for (const auto& [tp, e] : branches) denominator = denominator * ScalarPolynomial::linear(1, -tp.content(n));
  GAPolynomial numerator(nn);
  for (std::size_t k = 0; k < branches.size(); ++k) {
    ScalarPolynomial weight = ScalarPolynomial::linear(1, -c);
    for (std::size_t j = 0; j < branches.size(); ++j)
      if (j != k) weight = weight * ScalarPolynomial::linear(1, -branches[j].first.content(n));
    numerator = numerator + weight * GAPolynomial::constant(branches[k].second);
  }

  const int m = denominator.root_multiplicity(c);
  bool divisible = true;
  for (int k = 0; k < m; ++k) {
    auto [q, r] = numerator.divide_linear(c);
    if (!r.is_zero()) divisible = false;
    numerator = std::move(q);
    denominator = denominator.divide_linear(c).first;
  }
  bool value_ok = divisible && m == 1 && numerator(c) * (1 / denominator(c)) == matrix_unit_murphy(t);
  report.add(name + " value", value_ok,
             value_ok ? "" : "pole order " + std::to_string(m) + (divisible ? "" : ", nonzero remainder"));
  return report;
}

GroupAlgebraElement character_element(const Partition& lambda) {
  const auto n = static_cast<std::size_t>(lambda.size());
  GroupAlgebraElement chi(n);
  for (const StandardTableau& t : standard_tableaux(lambda)) chi += matrix_unit_murphy(t);
  return chi * to_rational(hook_product(lambda));
}

CheckReport character_recurrence_check(const Partition& lambda) {
  CheckReport report;
  const int n = lambda.size();
  const auto nn = static_cast<std::size_t>(n);
  const std::string name = "character_recurrence lambda=(" + lambda.to_string() + ")";
  if (n < 2) {
    report.add(name, true, "base case");
    return report;
  }

  auto central_idempotent = [](const Partition& shape) {
    GroupAlgebraElement acc(static_cast<std::size_t>(shape.size()));
    for (const StandardTableau& t : standard_tableaux(shape)) acc += matrix_unit_murphy(t);
    return acc;
  };

  GroupAlgebraElement normalized = central_idempotent(lambda);
  GroupAlgebraElement normalized_rhs(nn);
  GroupAlgebraElement unnormalized_rhs(nn);
  for (const Cell& removed : removable_cells(lambda)) {
    const Partition mu = remove_cell(lambda, removed);
    const int c = removed.content();
    GroupAlgebraElement chi_hat_mu = central_idempotent(mu).embed(nn);
    normalized_rhs += chi_hat_mu * murphy_factor(mu, removed, nn);

    // (a_1 - X_n)...(a_p - X_n)(X_n - a_{p+1})...(X_n - a_k) / ((b_1 - c)...(c - b_r))
    GroupAlgebraElement numerator = GroupAlgebraElement::identity(nn);
    for (const Cell& a : addable_cells(mu)) {
      if (a == removed) continue;
      GroupAlgebraElement factor = shifted_jm(n, a.content());
      if (a.content() > c) factor = -factor;
      numerator = numerator * factor;
    }
    Rational denominator = 1;
    for (const Cell& b : removable_cells(lambda)) {
      if (b == removed) continue;
      denominator *= b.content() > c ? b.content() - c : c - b.content();
    }
    GroupAlgebraElement chi_mu = character_element(mu).embed(nn);
    unnormalized_rhs += chi_mu * numerator * (1 / denominator);
  }

  bool normalized_ok = normalized == normalized_rhs;
  report.add(name + " normalized", normalized_ok,
             normalized_ok ? "" : "discrepancy: " + (normalized - normalized_rhs).to_string());
  GroupAlgebraElement chi = character_element(lambda);
  bool unnormalized_ok = chi == unnormalized_rhs;
  report.add(name + " unnormalized", unnormalized_ok,
             unnormalized_ok ? "" : "discrepancy: " + (chi - unnormalized_rhs).to_string());
  return report;
}

long long murnaghan_nakayama(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw std::invalid_argument("murnaghan_nakayama: sizes differ");
  // Beta-set (abacus) form: removing a border strip of length r moves one bead from b to b - r.
  const int len = lambda.length();
  std::set<int> beads;
  for (int i = 1; i <= len; ++i) beads.insert(lambda.row(i) + len - i);

  auto rec = [&](auto&& self, std::set<int>& current, std::size_t part) -> long long {
    if (part == rho.parts().size()) return 1;
    const int r = rho.parts()[part];
    long long total = 0;
    std::vector<int> snapshot(current.begin(), current.end());
    for (int b : snapshot) {
      const int target = b - r;
      if (target < 0 || current.count(target)) continue;
      long long between = std::count_if(current.begin(), current.end(), [&](int x) { return x > target && x < b; });
      current.erase(b);
      current.insert(target);
      long long sign = (between % 2 == 0) ? 1 : -1;
      total += sign * self(self, current, part + 1);
      current.erase(target);
      current.insert(b);
    }
    return total;
  };
  return rec(rec, beads, 0);
}

}  // namespace symfuse
