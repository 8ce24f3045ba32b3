#include "symfuse/serialize.hpp"

#include <map>
#include <stdexcept>

namespace symfuse {

nlohmann::json element_to_json(const GroupAlgebraElement& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Term& t : a.terms()) terms.push_back({{"perm", t.perm.to_string()}, {"coeff", to_string(t.coeff)}});
  return {{"n", a.degree()}, {"terms", std::move(terms)}};
}

GroupAlgebraElement element_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      terms.push_back({Permutation::parse(t.at("perm").get<std::string>(), n),
                       parse_rational(t.at("coeff").get<std::string>())});
    }
    return GroupAlgebraElement::from_terms(n, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed group algebra JSON: ") + e.what());
  }
}

nlohmann::json character_rows(const GroupAlgebraElement& chi) {
  const auto n = static_cast<int>(chi.degree());
  std::map<Partition, Rational> values;
  for (const Partition& rho : partitions_of(n)) values.emplace(rho, Rational(0));
  std::map<Partition, bool> seen;
  for (const Permutation& s : all_permutations(chi.degree(), Permutation::kMaxDegree)) {
    const Partition rho = cycle_type(s);
    const Rational value = chi.coefficient(s);
    if (!seen[rho]) {
      values[rho] = value;
      seen[rho] = true;
    } else if (values[rho] != value) {
      throw std::invalid_argument("character_rows: element is not constant on class (" + rho.to_string() + ")");
    }
  }
  nlohmann::json rows = nlohmann::json::array();
  const auto classes = partitions_of(n);
  for (auto it = classes.rbegin(); it != classes.rend(); ++it) rows.push_back({{"class", it->to_string()}, {"value", to_string(values[*it])}});
  return rows;
}

nlohmann::json report_to_json(const CheckReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : report.results()) out.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return out;
}

}  // namespace symfuse
