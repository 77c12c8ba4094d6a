#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "casimir/casimir.hpp"
#include "casimir/cycles.hpp"
#include "casimir/mpoly.hpp"
#include "casimir/power_sum.hpp"

namespace casimir {

using Json = nlohmann::ordered_json;

enum class VariableStyle { plain, latex };

/// a1..aN, or \alpha_{1}..\alpha_{N}.
std::vector<std::string> alpha_names(std::size_t n, VariableStyle style = VariableStyle::plain);

/// Rational as "3", "-1/2" (denominator omitted when 1).
std::string rat_text(const Rat& r);

/// Human-readable polynomial in canonical term order, e.g. "a1*a5 - a2*a5 - a1 + a2".
std::string format_mpoly(const MPoly& p, const std::vector<std::string>& names,
                         VariableStyle style = VariableStyle::plain);
std::string format_mpoly(const MPoly& p, VariableStyle style = VariableStyle::plain);

/// e.g. "p3 - 3/2*p2 + 3".
std::string format_power_sum(const PowerSumPoly& p);

/// e.g. "p2 - (n^3 - n)/12".
std::string format_closed_form(const ClosedForm& f);

/// {"nvars": N, "terms": [{"c": "p/q", "e": [...]}, ...]} in canonical order.
Json to_json(const MPoly& p);
MPoly mpoly_from_json(const Json& j);

/// {"partitions": [{"parts": [...], "coeff_n": ["p/q", ...]}, ...]}, coeff_n
/// in ascending powers of n.
Json to_json(const ClosedForm& f);
ClosedForm closed_form_from_json(const Json& j);

/// A power-sum polynomial in ClosedForm layout with constant coefficients.
ClosedForm as_closed_form(const PowerSumPoly& p);

/// {"total", "zero", "match_literal", "match_alternating", "mismatch": [tuple, ...]}
/// followed by the consistent convention; `mismatch` lists tuples that
/// disagree with the oracle under `configured`.
Json to_json(const VerifyReport& r, SignConvention configured);

Json to_json(const Cycle& c);

/// Compact serialization used for every emitted document.
std::string dump(const Json& j);

}  // namespace casimir
