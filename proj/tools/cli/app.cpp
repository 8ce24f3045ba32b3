#include "app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>

#include "symfuse/symfuse.hpp"

namespace symfuse::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Caps {
  long max_n = 6;
  long max_fusion_n = 5;
  std::size_t max_tensor = kDefaultTensorCap;
  bool allow_large = false;
};

long env_cap(const char* name, long fallback) {
  const char* text = std::getenv(name);
  if (text == nullptr || *text == '\0') return fallback;
  char* end = nullptr;
  const long value = std::strtol(text, &end, 10);
  if (*end != '\0' || value <= 0) throw UsageError(std::string(name) + " must be a positive integer, got '" + text + "'");
  return value;
}

Caps read_caps(bool allow_large) {
  Caps caps;
  caps.max_n = env_cap("SYMFUSE_MAX_N", caps.max_n);
  caps.max_fusion_n = env_cap("SYMFUSE_MAX_FUSION_N", caps.max_fusion_n);
  caps.max_tensor = static_cast<std::size_t>(env_cap("SYMFUSE_MAX_TENSOR", static_cast<long>(caps.max_tensor)));
  caps.allow_large = allow_large;
  return caps;
}

void require_within(long value, long cap, const std::string& what, const char* env, const Caps& caps) {
  if (value > cap && !caps.allow_large) {
    throw UsageError(what + " = " + std::to_string(value) + " exceeds the cap " + std::to_string(cap) + " (raise " +
                     env + " or pass --allow-large)");
  }
}

std::size_t tensor_cap(const Caps& caps) {
  return caps.allow_large ? std::numeric_limits<std::size_t>::max() : caps.max_tensor;
}

/// Random points come from raw engine output so that a seed gives the same
/// sequence with every standard library.
class PointSource {
 public:
  explicit PointSource(std::uint64_t seed) : engine_(seed) {}

  Rational next() {
    const long num = static_cast<long>(engine_() % 41) - 20;
    const long den = 1 + static_cast<long>(engine_() % 7);
    return make_rational(num, den);
  }

  Rational next_avoiding(std::initializer_list<long> forbidden) {
    for (;;) {
      Rational x = next();
      bool ok = true;
      for (long f : forbidden) ok = ok && x != f;
      if (ok) return x;
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  CheckReport checks;
  std::vector<std::string> text;
};

StandardTableau parse_tableau(const std::string& text) {
  try {
    return StandardTableau::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid tableau: ") + e.what());
  }
}

Partition parse_partition(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid partition: ") + e.what());
  }
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
  return s;
}

// matrix-unit

struct MatrixUnitOptions {
  std::string tableau;
  std::string method = "murphy";
  bool trace = false;
};

void add_trace(Report& r, const FusionResult& fr) {
  json steps = json::array();
  for (const FusionStep& s : fr.steps) {
    steps.push_back({{"k", s.k},
                     {"multiplicity", s.multiplicity},
                     {"denominator", to_string(s.denominator_value)},
                     {"numerator_terms", s.numerator_terms},
                     {"value_terms", s.value_terms}});
    r.text.push_back("step k=" + std::to_string(s.k) + " m=" + std::to_string(s.multiplicity) +
                     " denominator=" + to_string(s.denominator_value) +
                     " numerator_terms=" + std::to_string(s.numerator_terms) +
                     " value_terms=" + std::to_string(s.value_terms));
  }
  r.results["trace"] = steps;
}

Report cmd_matrix_unit(const MatrixUnitOptions& opt, const Caps& caps) {
  Report r;
  r.command = "matrix-unit";
  const StandardTableau t = parse_tableau(opt.tableau);
  require_within(t.size(), caps.max_n, "tableau size", "SYMFUSE_MAX_N", caps);
  r.inputs = {{"tableau", t.to_string()}, {"method", opt.method}, {"trace", opt.trace}};

  const Rational hooks(static_cast<long>(hook_product(t.shape())));
  r.results["tableau"] = t.to_string();
  r.results["shape"] = t.shape().to_string();
  r.results["contents"] = t.contents();
  r.results["hook_product"] = to_string(hooks);
  r.text.push_back("tableau " + t.to_string() + "  shape " + t.shape().to_string() + "  contents " +
                   join(t.contents()) + "  n!/f = " + to_string(hooks));

  std::optional<GroupAlgebraElement> murphy;
  std::optional<GroupAlgebraElement> fusion;
  if (opt.method != "fusion") {
    murphy = matrix_unit_murphy(t);
    const bool ok = *murphy * *murphy == *murphy;
    r.checks.add("murphy.idempotent", ok, ok ? "" : "E_T^2 != E_T");
  }
  if (opt.method != "murphy") {
    try {
      FusionResult fr = evaluate_fusion_traced(t);
      r.checks.add("fusion.removable", true);
      if (opt.trace) add_trace(r, fr);
      fusion = std::move(fr.value);
    } catch (const FusionSingularityError& e) {
      r.checks.add("fusion.removable", false, e.what());
    }
  }
  if (murphy && fusion) {
    const bool ok = *fusion == *murphy * hooks;
    r.checks.add("fusion_equals_murphy", ok, ok ? "" : "Phi_T != (n!/f) E_T");
  }

  const GroupAlgebraElement unit = murphy ? *murphy : fusion ? *fusion * Rational(1 / hooks) : GroupAlgebraElement();
  const GroupAlgebraElement element = fusion ? *fusion : murphy ? *murphy * hooks : GroupAlgebraElement();
  if (murphy || fusion) {
    r.results["E_T"] = element_to_json(unit);
    r.results["Phi_T"] = element_to_json(element);
    r.text.push_back("E_T = " + unit.to_string());
    r.text.push_back("Phi_T = " + element.to_string());
  }
  return r;
}

// characters

struct CharactersOptions {
  int n = -1;
  std::string lambda;
};

Report cmd_characters(const CharactersOptions& opt, const Caps& caps) {
  Report r;
  r.command = "characters";
  std::optional<Partition> only;
  int n = opt.n;
  if (!opt.lambda.empty()) {
    only = parse_partition(opt.lambda);
    if (n < 0) n = only->size();
    if (only->size() != n) {
      throw UsageError("--lambda " + only->to_string() + " is not a partition of " + std::to_string(n));
    }
  }
  if (n < 0) throw UsageError("characters needs --n or --lambda");
  require_within(n, caps.max_n, "n", "SYMFUSE_MAX_N", caps);
  r.inputs = {{"n", n}};
  if (only) r.inputs["lambda"] = only->to_string();

  auto classes = partitions_of(n);
  std::reverse(classes.begin(), classes.end());
  json class_names = json::array();
  std::string header = "lambda \\ class";
  for (const auto& rho : classes) {
    class_names.push_back(rho.to_string());
    header += "  " + rho.to_string();
  }
  r.results["classes"] = class_names;
  r.text.push_back(header);

  json table = json::array();
  for (const auto& lambda : partitions_of(n)) {
    if (only && lambda != *only) continue;
    const GroupAlgebraElement chi = character_element(lambda);
    json values = json::array();
    std::string line = lambda.to_string() + ":";
    try {
      const json rows = character_rows(chi);
      r.checks.add("characters.class_function lambda=" + lambda.to_string(), true);
      bool mn_ok = true;
      std::string mismatch;
      for (std::size_t k = 0; k < classes.size(); ++k) {
        const Rational value = parse_rational(rows[k]["value"].get<std::string>());
        const long long expected = murnaghan_nakayama(lambda, classes[k]);
        if (value != Rational(static_cast<long>(expected)) && mn_ok) {
          mn_ok = false;
          mismatch = "class " + classes[k].to_string() + ": " + to_string(value) + " vs " + std::to_string(expected);
        }
        values.push_back(to_string(value));
        line += "  " + to_string(value);
      }
      r.checks.add("characters.murnaghan_nakayama lambda=" + lambda.to_string(), mn_ok, mismatch);
    } catch (const std::invalid_argument& e) {
      r.checks.add("characters.class_function lambda=" + lambda.to_string(), false, e.what());
    }
    table.push_back({{"lambda", lambda.to_string()}, {"values", values}});
    r.text.push_back(line);
  }
  r.results["table"] = table;
  return r;
}

// verify

struct VerifyOptions {
  int n = 0;
  std::string suite = "all";
  std::uint64_t seed = 1;
};

void suite_units(int n, CheckReport& out) {
  const auto nn = static_cast<std::size_t>(n);
  const auto units = all_matrix_units(n);
  GroupAlgebraElement total(nn);
  for (const auto& [t, e] : units) {
    const std::string tag = " T=" + t.to_string();
    out.add("units.idempotent" + tag, e * e == e);
    bool eig = true;
    for (int i = 1; i <= n && eig; ++i) {
      const auto x = jm_element(i, nn);
      const auto ce = e * Rational(t.content(i));
      eig = x * e == ce && e * x == ce;
    }
    out.add("units.eigenvalues" + tag, eig);
    // Pairwise products grow as f^2 |S_n|^2; above n = 5 orthogonality follows from the other checks.
    if (n <= 5) {
      bool orth = true;
      for (const auto& [t2, e2] : units)
        if (t2 != t && orth) orth = (e * e2).is_zero();
      out.add("units.orthogonal" + tag, orth);
    }
    if (n >= 2) out.merge(regularity_check(t));
    if (n <= 6) {
      const double diff = seminormal_oracle(t.shape()).at(t).max_abs_diff(e * Rational(static_cast<long>(hook_product(t.shape()))));
      out.add("units.seminormal" + tag, diff <= 1e-9, diff <= 1e-9 ? "" : "max |diff| " + std::to_string(diff));
    }
    total += e;
  }
  out.add("units.complete n=" + std::to_string(n), total == GroupAlgebraElement::identity(nn));
  if (n >= 2) {
    for (const auto& u : all_standard_tableaux(n - 1)) {
      GroupAlgebraElement sum(nn);
      for (const auto& t : branch_up_all(u)) sum += units.at(t);
      out.add("units.branching U=" + u.to_string(), matrix_unit_murphy(u).embed(nn) == sum);
    }
  }
  out.merge(spectral_identity_check(n));
}

GroupAlgebraElement square_example_product() {
  auto el = [](std::initializer_list<std::pair<const char*, const char*>> terms) {
    return GroupAlgebraElement::parse_terms(4, terms);
  };
  return el({{"e", "1"}, {"(1 2)", "1"}}) * el({{"e", "1"}, {"(1 3)", "-1"}}) * el({{"e", "1"}, {"(2 3)", "-1/2"}}) *
         el({{"e", "2"}, {"(1 4)", "-1"}, {"(2 4)", "-1"}, {"(3 4)", "-1"}}) *
         el({{"e", "2"}, {"(1 4)", "1"}, {"(2 4)", "1"}, {"(3 4)", "1"}});
}

void suite_fusion(int n, PointSource& points, CheckReport& out) {
  for (const auto& t : all_standard_tableaux(n)) {
    const std::string tag = " T=" + t.to_string();
    const Rational hooks(static_cast<long>(hook_product(t.shape())));
    try {
      const bool ok = evaluate_fusion(t) == matrix_unit_murphy(t) * hooks;
      out.add("fusion.equals_murphy" + tag, ok, ok ? "" : "Phi_T != (n!/f) E_T");
    } catch (const FusionSingularityError& e) {
      out.add("fusion.equals_murphy" + tag, false, e.what());
    }
    const Rational pre = scalar_prefactor(t.branch_down().shape(), t.shape(), t.contents());
    const Rational ratio = hook_ratio(t.shape(), t.branch_down().shape());
    out.add("fusion.scalar_prefactor" + tag, pre == ratio, pre == ratio ? "" : to_string(pre) + " vs " + to_string(ratio));
    if (n >= 2) {
      for (int done = 0; done < 2;) {
        try {
          out.merge(phiupr_identity_check(t, points.next()));
          ++done;
        } catch (const std::invalid_argument&) {
        }
      }
    }
    const auto contents = t.contents();
    Rational u0 = points.next();
    while (sgn(u0) == 0 || std::find(contents.begin(), contents.end(), u0) != contents.end()) u0 = points.next();
    out.merge(phiuinge_identity_check(t, n + 1, u0));
  }
  if (n >= 2) {
    for (int k = 0; k < 3; ++k) {
      std::vector<Rational> u;
      while (u.size() < static_cast<std::size_t>(n)) {
        Rational x = points.next();
        if (std::find(u.begin(), u.end(), x) == u.end()) u.push_back(x);
      }
      out.merge(ordering_invariance_check(u));
    }
  }
  if (n == 4) {
    const auto t = StandardTableau::parse("1 2/3 4");
    const bool ok = evaluate_fusion(t) == square_example_product();
    out.add("fusion.example T=1 2/3 4", ok, ok ? "" : "differs from (1+(1 2))(1-(1 3))(1-(2 3)/2)(2-X_4)(2+X_4)");
  }
}

void suite_characters(int n, CheckReport& out) {
  const auto perms = all_permutations(static_cast<std::size_t>(n), Permutation::kMaxDegree);
  for (const auto& lambda : partitions_of(n)) {
    const std::string tag = " lambda=" + lambda.to_string();
    const auto chi = character_element(lambda);
    bool ok = true;
    std::string detail;
    for (const auto& s : perms) {
      const long long expected = murnaghan_nakayama(lambda, cycle_type(s));
      if (chi.coefficient(s) != Rational(static_cast<long>(expected))) {
        ok = false;
        detail = "at " + s.to_string();
        break;
      }
    }
    out.add("characters.murnaghan_nakayama" + tag, ok, detail);
    const bool identity_ok = chi.coefficient(Permutation(static_cast<std::size_t>(n))) == Rational(static_cast<long>(dimension(lambda)));
    out.add("characters.degree" + tag, identity_ok);
    out.merge(character_recurrence_check(lambda));
  }
}

void suite_ybe(int n, PointSource& points, const Caps& caps, CheckReport& out) {
  const std::size_t cap = tensor_cap(caps);
  for (std::size_t dim : {2u, 3u}) {
    for (int k = 0; k < 5; ++k) {
      Rational u, v;
      do {
        u = points.next_avoiding({0});
        v = points.next_avoiding({0});
      } while (sgn(u + v) == 0);
      out.merge(ybe_check(u, v, dim));
    }
    for (const auto& t : all_standard_tableaux(n)) {
      out.merge(fused_projector_check(t, dim, cap));
      const auto img = schur_weyl_image(matrix_unit_murphy(t), dim, cap);
      const Rational r(static_cast<long>(rank(img.matrix())));
      const Rational w = weyl_dimension(t.shape(), dim);
      out.add("ybe.rank T=" + t.to_string() + " N=" + std::to_string(dim), r == w,
              r == w ? "" : to_string(r) + " vs " + to_string(w));
    }
  }
  std::vector<std::pair<Rational, Rational>> pairs;
  while (pairs.size() < 2) {
    Rational x = points.next_avoiding({0, 1, -1});
    Rational y = points.next_avoiding({0, 1, -1});
    Rational s = x + y;
    if (sgn(s) != 0 && s != 1 && s != -1) pairs.emplace_back(x, y);
  }
  out.merge(fused_rw_check(points.next_avoiding({0, 1, -1}), 2, pairs));
}

Report cmd_verify(const VerifyOptions& opt, const Caps& caps) {
  Report r;
  r.command = "verify";
  if (opt.n < 1) throw UsageError("--n must be at least 1");
  const bool all = opt.suite == "all";
  if (all || opt.suite == "units" || opt.suite == "characters") require_within(opt.n, caps.max_n, "n", "SYMFUSE_MAX_N", caps);
  if (all || opt.suite == "fusion") require_within(opt.n, caps.max_fusion_n, "n", "SYMFUSE_MAX_FUSION_N", caps);
  if (all || opt.suite == "ybe") {
    const double size = std::pow(3.0, opt.n);
    if (size > static_cast<double>(caps.max_tensor) && !caps.allow_large) {
      throw UsageError("3^n = " + std::to_string(static_cast<long long>(size)) + " exceeds the tensor cap " +
                       std::to_string(caps.max_tensor) + " (raise SYMFUSE_MAX_TENSOR or pass --allow-large)");
    }
  }
  r.inputs = {{"n", opt.n}, {"suite", opt.suite}, {"seed", opt.seed}};

  PointSource points(opt.seed);
  json suites = json::array();
  if (all || opt.suite == "units") {
    suite_units(opt.n, r.checks);
    suites.push_back("units");
  }
  if (all || opt.suite == "fusion") {
    suite_fusion(opt.n, points, r.checks);
    suites.push_back("fusion");
  }
  if (all || opt.suite == "characters") {
    suite_characters(opt.n, r.checks);
    suites.push_back("characters");
  }
  if (all || opt.suite == "ybe") {
    suite_ybe(opt.n, points, caps, r.checks);
    suites.push_back("ybe");
  }
  std::size_t passed = 0;
  for (const auto& c : r.checks.results()) passed += c.pass ? 1 : 0;
  r.results = {{"suites", suites}, {"passed", passed}, {"failed", r.checks.results().size() - passed}};
  r.text.push_back("suites run: " + suites.dump());
  return r;
}

// output

void emit(const Report& r, const std::string& format, long long elapsed_ms, std::ostream& out) {
  if (format == "json") {
    json j = {{"command", r.command},
              {"inputs", r.inputs},
              {"results", r.results},
              {"checks", report_to_json(r.checks)},
              {"elapsed_ms", elapsed_ms}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "command: " << r.command << "\n";
  out << "inputs: " << r.inputs.dump() << "\n";
  for (const auto& line : r.text) out << line << "\n";
  std::size_t failed = 0;
  for (const auto& c : r.checks.results()) {
    failed += c.pass ? 0 : 1;
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  out << "checks: " << r.checks.results().size() - failed << " passed, " << failed << " failed\n";
  out << "elapsed_ms: " << elapsed_ms << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact matrix units, fusion procedure and characters for the symmetric group", "symfuse"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  bool allow_large = false;
  bool no_timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--allow-large", allow_large, "Permit inputs above the size caps");
  app.add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 so output is reproducible");

  MatrixUnitOptions mu;
  auto* mu_cmd = app.add_subcommand("matrix-unit", "E_T and Phi_T for a standard tableau");
  mu_cmd->add_option("--tableau", mu.tableau, "Rows separated by '/', e.g. \"1 2/3 4\"")->required();
  mu_cmd->add_option("--method", mu.method, "Construction")->check(CLI::IsMember({"murphy", "fusion", "both"}));
  mu_cmd->add_flag("--trace", mu.trace, "Dump the fusion steps");

  CharactersOptions ch;
  auto* ch_cmd = app.add_subcommand("characters", "Character table from sums of Phi_T");
  ch_cmd->add_option("--n", ch.n, "Degree")->check(CLI::NonNegativeNumber);
  ch_cmd->add_option("--lambda", ch.lambda, "Single partition, e.g. \"2,1\"");

  VerifyOptions ve;
  auto* ve_cmd = app.add_subcommand("verify", "Run the verification suites");
  ve_cmd->add_option("--n", ve.n, "Degree")->required();
  ve_cmd->add_option("--suite", ve.suite, "Suite")->check(CLI::IsMember({"units", "fusion", "characters", "ybe", "all"}));
  ve_cmd->add_option("--seed", ve.seed, "Seed for random evaluation points");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllPass;
  } catch (const CLI::ParseError& e) {
    err << "symfuse: " << e.what() << "\n";
    return kUsageError;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    const Caps caps = read_caps(allow_large);
    if (*mu_cmd) report = cmd_matrix_unit(mu, caps);
    else if (*ch_cmd) report = cmd_characters(ch, caps);
    else report = cmd_verify(ve, caps);
  } catch (const UsageError& e) {
    err << "symfuse: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::length_error& e) {
    err << "symfuse: " << e.what() << "\n";
    return kUsageError;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  emit(report, format, no_timing ? 0 : elapsed.count(), out);
  return report.checks.all_pass() ? kAllPass : kCheckFailure;
}

}  // namespace symfuse::cli
