// One PASS/FAIL line per acceptance criterion. Exit status is 0 only if all pass.
// Usage: symfuse_acceptance [--seed N]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "../oracles.hpp"
#include "symfuse/symfuse.hpp"

using namespace symfuse;

namespace {

// Pinned limits.
constexpr double kSeminormalTolerance = 1e-9;
constexpr double kExampleBudgetMs = 1000.0;
constexpr double kEquivalenceBudgetMs = 60000.0;
constexpr double kAxiomBudgetMs = 300000.0;
constexpr std::uint64_t kDefaultSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  void absorb(const CheckReport& r) {
    for (const auto& c : r.results()) expect(c.pass, c.name + (c.detail.empty() ? "" : ": " + c.detail));
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_ms;  // 0 means no time limit
  std::function<void(Outcome&, std::mt19937_64&)> run;
};

GroupAlgebraElement el(std::size_t n, std::initializer_list<std::pair<const char*, const char*>> terms) {
  return GroupAlgebraElement::parse_terms(n, terms);
}

Rational random_avoiding(std::mt19937_64& rng, std::initializer_list<long> forbidden) {
  for (;;) {
    Rational x = oracle::random_rational(rng);
    bool ok = true;
    for (long f : forbidden) ok = ok && x != f;
    if (ok) return x;
  }
}

void example_reproduction(Outcome& out, std::mt19937_64&) {
  const auto t = StandardTableau::parse("1 2/3 4");
  out.expect(t.contents() == std::vector<int>{0, 1, -1, 0}, "contents differ from 0,1,-1,0");
  FusionResult r;
  try {
    r = evaluate_fusion_traced(t);
  } catch (const FusionSingularityError& e) {
    out.expect(false, e.what());
    return;
  }
  out.expect(r.steps.size() == 4 && r.steps[3].multiplicity == 1, "expected one cancelled factor at u_4 = 0");
  const auto expanded = el(4, {{"e", "1"}, {"(1 2)", "1"}}) * el(4, {{"e", "1"}, {"(1 3)", "-1"}}) *
                         el(4, {{"e", "1"}, {"(2 3)", "-1/2"}}) *
                         el(4, {{"e", "2"}, {"(1 4)", "-1"}, {"(2 4)", "-1"}, {"(3 4)", "-1"}}) *
                         el(4, {{"e", "2"}, {"(1 4)", "1"}, {"(2 4)", "1"}, {"(3 4)", "1"}});
  out.expect(r.value == expanded, "fusion value differs from (1+(1 2))(1-(1 3))(1-(2 3)/2)(2-X_4)(2+X_4)");
  out.expect(r.value == matrix_unit_murphy(t) * Rational(12), "fusion value differs from 12 E_T");
  out.detail = "Phi_T has " + std::to_string(r.value.size()) + " terms, equal to the expanded product (no /4) and to 12 E_T";
}

void equivalence_sweep(Outcome& out, std::mt19937_64&) {
  std::size_t count = 0;
  for (int n = 2; n <= 5; ++n)
    for (const auto& t : all_standard_tableaux(n)) {
      ++count;
      const Rational scale(static_cast<long>(hook_product(t.shape())));
      out.expect(evaluate_fusion(t) == matrix_unit_murphy(t) * scale, "fusion != murphy for " + t.to_string());
    }
  // Number of standard tableaux of size n equals the number of involutions in S_n.
  std::size_t involutions = 0;
  for (std::size_t n = 2, a = 1, b = 2; n <= 5; ++n) {
    involutions += b;
    const std::size_t next = b + n * a;
    a = b;
    b = next;
  }
  out.expect(count == involutions, "expected " + std::to_string(involutions) + " tableaux, got " + std::to_string(count));
  if (out.pass) out.detail = std::to_string(count) + " tableaux (2+4+10+26)";
}

void matrix_unit_axioms(Outcome& out, std::mt19937_64&) {
  for (int n = 2; n <= 6; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    const auto units = all_matrix_units(n);
    GroupAlgebraElement total(nn);
    for (const auto& [t, e] : units) {
      out.expect(e * e == e, "E_T^2 != E_T for " + t.to_string());
      total += e;
      for (int i = 1; i <= n; ++i) {
        const auto x = jm_element(i, nn);
        const auto ce = e * Rational(t.content(i));
        out.expect(x * e == ce && e * x == ce, "X_i E_T != c_i E_T for " + t.to_string() + " i=" + std::to_string(i));
      }
      if (n <= 5)
        for (const auto& [t2, e2] : units)
          if (t2 != t) out.expect((e * e2).is_zero(), "E_T E_T' != 0 for " + t.to_string() + ", " + t2.to_string());
    }
    out.expect(total == GroupAlgebraElement::identity(nn), "sum of E_T != 1 for n=" + std::to_string(n));
  }
}

void spectral_identity(Outcome& out, std::mt19937_64&) {
  for (int n = 2; n <= 5; ++n) out.absorb(spectral_identity_check(n));
}

void branching(Outcome& out, std::mt19937_64&) {
  for (int n = 2; n <= 5; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    for (const auto& u : all_standard_tableaux(n - 1)) {
      GroupAlgebraElement sum(nn);
      for (const auto& t : branch_up_all(u)) sum += matrix_unit_murphy(t);
      out.expect(matrix_unit_murphy(u).embed(nn) == sum, "branching fails for U=" + u.to_string());
    }
  }
}

void hook_ratio_criterion(Outcome& out, std::mt19937_64&) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& cell : removable_cells(lambda)) {
        const auto mu = remove_cell(lambda, cell);
        const Rational expected = make_rational(static_cast<long>(hook_product(lambda)), static_cast<long>(hook_product(mu)));
        const Rational h = hook_ratio(lambda, mu);
        out.expect(h == expected, "hook ratio " + lambda.to_string() + "/" + mu.to_string());
      }
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : all_standard_tableaux(n)) {
      const auto lambda = t.shape();
      const auto mu = t.branch_down().shape();
      out.expect(scalar_prefactor(mu, lambda, t.contents()) == hook_ratio(lambda, mu),
                 "scalar prefactor differs for " + t.to_string());
    }
}

void phiupr(Outcome& out, std::mt19937_64& rng) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& t : all_standard_tableaux(n)) {
      int done = 0;
      while (done < 5) {
        const Rational u0 = oracle::random_rational(rng);
        try {
          out.absorb(phiupr_identity_check(t, u0));
          ++done;
        } catch (const std::invalid_argument&) {
          // not admissible; draw again
        }
      }
    }
}

void characters(Outcome& out, std::mt19937_64&) {
  for (int n = 1; n <= 6; ++n) {
    const auto perms = all_permutations(static_cast<std::size_t>(n));
    for (const auto& lambda : partitions_of(n)) {
      const auto chi = character_element(lambda);
      for (const auto& s : perms)
        out.expect(chi.coefficient(s) == Rational(static_cast<long>(oracle::rim_hook_character(lambda, cycle_type(s)))),
                   "chi_" + lambda.to_string() + " at " + s.to_string());
      if (n <= 5) out.absorb(character_recurrence_check(lambda));
    }
  }
}

void seminormal(Outcome& out, std::mt19937_64&) {
  double worst = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& [t, approx] : seminormal_oracle(lambda)) {
        const double diff = approx.max_abs_diff(matrix_element_murphy(t));
        worst = std::max(worst, diff);
        out.expect(diff <= kSeminormalTolerance, "seminormal mismatch for " + t.to_string());
      }
  if (out.pass) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", worst);
    out.detail = std::string("max |diff| = ") + buf;
  }
}

void yang_baxter(Outcome& out, std::mt19937_64& rng) {
  for (std::size_t dim : {2u, 3u})
    for (int k = 0; k < 20; ++k) {
      Rational u, v;
      do {
        u = random_avoiding(rng, {0});
        v = random_avoiding(rng, {0});
      } while (sgn(u + v) == 0);
      out.absorb(ybe_check(u, v, dim));
    }
  std::vector<std::pair<Rational, Rational>> pairs;
  while (pairs.size() < 5) {
    Rational x = random_avoiding(rng, {0, 1, -1});
    Rational y = random_avoiding(rng, {0, 1, -1});
    Rational s = x + y;
    if (sgn(s) != 0 && s != 1 && s != -1) pairs.emplace_back(x, y);
  }
  out.absorb(fused_rw_check(random_avoiding(rng, {0, 1, -1}), 2, pairs));
  out.absorb(fused_rw_check(random_avoiding(rng, {0, 1, -1}), 3));
}

void schur_weyl_ranks(Outcome& out, std::mt19937_64&) {
  for (std::size_t dim : {2u, 3u})
    for (int n = 1; n <= 4; ++n)
      for (const auto& t : all_standard_tableaux(n)) {
        const auto img = schur_weyl_image(matrix_unit_murphy(t), dim);
        const Rational r(static_cast<long>(rank(img.matrix())));
        out.expect(r == oracle::weyl_product_dimension(t.shape(), static_cast<long>(dim)),
                   "rank mismatch for " + t.to_string() + " N=" + std::to_string(dim));
      }
}

void ordering_invariance(Outcome& out, std::mt19937_64& rng) {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k < 10; ++k) {
      std::vector<Rational> u;
      while (u.size() < static_cast<std::size_t>(n)) {
        Rational x = oracle::random_rational(rng);
        if (std::find(u.begin(), u.end(), x) == u.end()) u.push_back(x);
      }
      out.absorb(ordering_invariance_check(u));
    }
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = kDefaultSeed;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: symfuse_acceptance [--seed N]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {"AC01", "example tableau 1 2/3 4 by fusion", kExampleBudgetMs, example_reproduction},
      {"AC02", "fusion equals murphy, n=2..5", kEquivalenceBudgetMs, equivalence_sweep},
      {"AC03", "matrix unit axioms, n=2..6", kAxiomBudgetMs, matrix_unit_axioms},
      {"AC04", "spectral identity, n=2..5", 0, spectral_identity},
      {"AC05", "branching sums, n<=5", 0, branching},
      {"AC06", "hook ratio and scalar prefactor", 0, hook_ratio_criterion},
      {"AC07", "cleared phi_U identity at random points", 0, phiupr},
      {"AC08", "characters vs rim-hook rule, recurrence", 0, characters},
      {"AC09", "seminormal oracle within 1e-9", 0, seminormal},
      {"AC10", "Yang-Baxter and fused R on W(x)W", 0, yang_baxter},
      {"AC11", "Schur-Weyl ranks vs Weyl dimension", 0, schur_weyl_ranks},
      {"AC12", "ordering invariance at random points", 0, ordering_invariance},
  };

  std::cout << "seed " << seed << "\n";
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& c = criteria[k];
    std::mt19937_64 rng(seed + k);
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out, rng);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_ms > 0 && ms > c.budget_ms && out.pass) {
      out.pass = false;
      out.detail = "over time budget of " + std::to_string(static_cast<long>(c.budget_ms)) + " ms";
    }
    failed += out.pass ? 0 : 1;
    std::cout << (out.pass ? "PASS " : "FAIL ") << c.id << "  " << c.title << "  [" << out.checks << " checks, "
              << static_cast<long>(ms) << " ms]";
    if (!out.detail.empty()) std::cout << "  " << out.detail;
    std::cout << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
