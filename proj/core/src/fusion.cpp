#include "symfuse/fusion.hpp"

#include <algorithm>

#include "symfuse/matrix_units.hpp"
#include "symfuse/polynomial.hpp"

namespace symfuse {

namespace {

GroupAlgebraElement ordered_product(const std::vector<Rational>& u, bool reverse_lex) {
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (u[i] == u[j]) {
        throw std::invalid_argument("fusion product: u_" + std::to_string(i + 1) + " = u_" + std::to_string(j + 1) +
                                    " makes phi_ij singular");
      }
  GroupAlgebraElement acc = GroupAlgebraElement::identity(n);
  const int nn = static_cast<int>(n);
  if (reverse_lex) {
    for (int j = 2; j <= nn; ++j)
      for (int i = 1; i < j; ++i) acc = acc * fusion_factor(i, j, u[i - 1], u[j - 1], n);
  } else {
    for (int i = 1; i <= nn; ++i)
      for (int j = i + 1; j <= nn; ++j) acc = acc * fusion_factor(i, j, u[i - 1], u[j - 1], n);
  }
  return acc;
}

}  // namespace

GroupAlgebraElement fusion_factor(int i, int j, const Rational& u, const Rational& v, std::size_t n) {
  if (u == v) throw std::invalid_argument("fusion_factor: u == v");
  GroupAlgebraElement f = GroupAlgebraElement::identity(n);
  f -= GroupAlgebraElement::basis(transposition(std::min(i, j), std::max(i, j), n), Rational(1 / (u - v)));
  return f;
}

GroupAlgebraElement fusion_product_generic(const std::vector<Rational>& u) { return ordered_product(u, true); }

GroupAlgebraElement fusion_product_lex(const std::vector<Rational>& u) { return ordered_product(u, false); }

CheckReport ordering_invariance_check(const std::vector<Rational>& u) {
  CheckReport report;
  std::string params;
  for (std::size_t k = 0; k < u.size(); ++k) params += (k ? "," : "") + to_string(u[k]);
  GroupAlgebraElement rev = fusion_product_generic(u);
  GroupAlgebraElement lex = fusion_product_lex(u);
  bool ok = rev == lex;
  report.add("ordering_invariance u=(" + params + ")", ok, ok ? "" : "difference: " + (rev - lex).to_string());
  return report;
}

FusionResult evaluate_fusion_traced(const StandardTableau& t) {
  const int n = t.size();
  const auto nn = static_cast<std::size_t>(n);
  const std::vector<int> c = t.contents();
  FusionResult result{GroupAlgebraElement::identity(nn), {}, {}};

  for (int k = 1; k <= n; ++k) {
    const int ck = c[k - 1];
    FusionStep step;
    step.k = k;
    step.multiplicity = static_cast<int>(std::count(c.begin(), c.begin() + (k - 1), ck));
    const auto m = static_cast<std::size_t>(step.multiplicity);

    // N_k in the shifted variable s = u - c_k. Only s^0..s^m survive the m
    // divisions by s followed by evaluation at s = 0, so higher powers are dropped.
    // Factor i is ((c_i - c_k) - (i k)) - s.
    std::vector<GroupAlgebraElement> numerator{result.value};
    Rational denominator = 1;
    for (int i = 1; i < k; ++i) {
      GroupAlgebraElement constant_part = GroupAlgebraElement::scalar(nn, c[i - 1] - ck);
      constant_part -= GroupAlgebraElement::basis(transposition(i, k, nn));
      std::vector<GroupAlgebraElement> next;
      next.reserve(std::min(numerator.size() + 1, m + 1));
      for (std::size_t d = 0; d <= std::min(numerator.size(), m); ++d) {
        GroupAlgebraElement coeff = d < numerator.size() ? numerator[d] * constant_part : GroupAlgebraElement(nn);
        if (d > 0) coeff -= numerator[d - 1];
        next.push_back(std::move(coeff));
      }
      numerator = std::move(next);
      // (c_i - u) contributes (c_i - c_k) to the reduced denominator, or -1 once s is cancelled.
      denominator *= c[i - 1] == ck ? Rational(-1) : Rational(c[i - 1] - ck);
    }
    for (const auto& coeff : numerator) step.numerator_terms += coeff.size();

    // Dividing by s leaves the s^0 coefficient as the remainder.
    for (std::size_t d = 0; d < m; ++d) {
      if (!numerator[d].is_zero()) {
        throw FusionSingularityError("fusion singularity not removable at step k=" + std::to_string(k) +
                                     " for tableau " + t.to_string());
      }
    }
    step.denominator_value = denominator;
    result.value = m < numerator.size() ? numerator[m] * Rational(1 / denominator) : GroupAlgebraElement(nn);
    step.value_terms = result.value.size();
    result.steps.push_back(step);
    result.intermediates.push_back(result.value);
  }
  return result;
}

GroupAlgebraElement evaluate_fusion(const StandardTableau& t) { return evaluate_fusion_traced(t).value; }

CheckReport phiupr_identity_check(const StandardTableau& t, const Rational& u0) {
  const int n = t.size();
  if (n < 2) throw std::invalid_argument("phiupr_identity_check: tableau needs at least two cells");
  const auto nn = static_cast<std::size_t>(n);
  const StandardTableau u = t.branch_down();
  const std::vector<int> c = t.contents();
  if (sgn(u0) == 0) throw std::invalid_argument("phiupr_identity_check: u0 must be nonzero");
  for (int i = 1; i < n; ++i)
    if (u0 == c[i - 1]) throw std::invalid_argument("phiupr_identity_check: u0 equals content c_" + std::to_string(i));
  for (const Cell& a : addable_cells(u.shape()))
    if (u0 == a.content()) throw std::invalid_argument("phiupr_identity_check: u0 equals an addable content of sh(U)");

  const GroupAlgebraElement phi_u = matrix_element_murphy(u).embed(nn);
  GroupAlgebraElement lhs = phi_u;
  Rational scalar = 1;
  for (int i = 1; i < n; ++i) {
    lhs = lhs * fusion_factor(i, n, Rational(c[i - 1]), u0, nn);
    const Rational d = u0 - c[i - 1];
    scalar *= 1 - 1 / (d * d);
  }
  GroupAlgebraElement one_minus = GroupAlgebraElement::identity(nn) - jm_element(n, nn) * Rational(1 / u0);
  lhs = lhs * one_minus;
  GroupAlgebraElement rhs = phi_u * scalar;

  CheckReport report;
  bool ok = lhs == rhs;
  report.add("phiupr T=" + t.to_string() + " u0=" + to_string(u0), ok,
             ok ? "" : "difference: " + (lhs - rhs).to_string());
  return report;
}

CheckReport phiuinge_identity_check(const StandardTableau& u, int r, const Rational& u0) {
  const int m = u.size();
  if (r <= m) throw std::invalid_argument("phiuinge_identity_check: r must exceed |U|");
  if (sgn(u0) == 0) throw std::invalid_argument("phiuinge_identity_check: u0 must be nonzero");
  const auto rr = static_cast<std::size_t>(r);
  const std::vector<int> c = u.contents();
  for (int i = 1; i <= m; ++i)
    if (u0 == c[i - 1]) throw std::invalid_argument("phiuinge_identity_check: u0 equals a content of U");

  const GroupAlgebraElement phi_u = matrix_element_murphy(u).embed(rr);
  GroupAlgebraElement lhs = phi_u;
  for (int i = m; i >= 1; --i) lhs = lhs * fusion_factor(i, r, Rational(-c[i - 1]), Rational(-u0), rr);
  GroupAlgebraElement sum(rr);
  for (int i = 1; i <= m; ++i) sum += GroupAlgebraElement::basis(transposition(i, r, rr));
  GroupAlgebraElement rhs = phi_u * (GroupAlgebraElement::identity(rr) - sum * Rational(1 / u0));

  CheckReport report;
  bool ok = lhs == rhs;
  report.add("phiuinge U=" + u.to_string() + " r=" + std::to_string(r) + " u0=" + to_string(u0), ok,
             ok ? "" : "difference: " + (lhs - rhs).to_string());
  return report;
}

Rational scalar_prefactor(const Partition& mu, const Partition& lambda, const std::vector<int>& contents) {
  if (!added_cell(mu, lambda)) {
    throw std::invalid_argument("scalar_prefactor: (" + mu.to_string() + ") -> (" + lambda.to_string() +
                                ") is not a one-cell addition");
  }
  if (static_cast<int>(contents.size()) != lambda.size()) {
    throw std::invalid_argument("scalar_prefactor: expected " + std::to_string(lambda.size()) + " contents");
  }
  const int n = lambda.size();
  const Rational cn = contents[n - 1];
  // prod ((u - c_i)^2 - 1) * u  over  prod (u - c_i)^2 * (u - c_n)
  ScalarPolynomial numerator = ScalarPolynomial::linear(1, 0);
  ScalarPolynomial denominator = ScalarPolynomial::linear(1, -cn);
  for (int i = 1; i < n; ++i) {
    const Rational ci = contents[i - 1];
    numerator = numerator * ScalarPolynomial::linear(1, -ci - 1) * ScalarPolynomial::linear(1, -ci + 1);
    denominator = denominator * ScalarPolynomial::linear(1, -ci) * ScalarPolynomial::linear(1, -ci);
  }
  const int m = denominator.root_multiplicity(cn);
  for (int k = 0; k < m; ++k) {
    auto [q, r] = numerator.divide_linear(cn);
    if (sgn(r) != 0) throw FusionSingularityError("scalar_prefactor: pole at u = c_n is not removable");
    numerator = std::move(q);
    denominator = denominator.divide_linear(cn).first;
  }
  return numerator(cn) / denominator(cn);
}

}  // namespace symfuse
