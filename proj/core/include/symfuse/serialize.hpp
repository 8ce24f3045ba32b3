#pragma once

#include <nlohmann/json.hpp>

#include "symfuse/check_report.hpp"
#include "symfuse/group_algebra.hpp"
#include "symfuse/young.hpp"

namespace symfuse {

/// {"n": int, "terms": [{"perm": "<cycle notation>", "coeff": "p/q"}]}, terms in canonical order.
nlohmann::json element_to_json(const GroupAlgebraElement& a);
/// Inverse of element_to_json; throws std::invalid_argument on malformed input.
GroupAlgebraElement element_from_json(const nlohmann::json& j);

/// One row per conjugacy class: {"class": "2,1", "value": "p/q"}, classes in
/// lexicographic partition order, so the identity class (1^n) comes first. Throws std::invalid_argument if chi is not a class function.
nlohmann::json character_rows(const GroupAlgebraElement& chi);

/// [{"name": ..., "pass": bool, "detail": ...}]
nlohmann::json report_to_json(const CheckReport& report);

}  // namespace symfuse
