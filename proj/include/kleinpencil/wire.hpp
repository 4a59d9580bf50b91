// JSON wire formats: cyclotomic coefficients as [exponent, "a/b"] term lists
// and curve files { "degree": d, "terms": [ { "exps": [...], "coeff": ... } ] }.
// The parser canonicalizes, so any term list denoting the same field element
// loads to the same CycNum.
#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "kleinpencil/forms.hpp"
#include "kleinpencil/mori.hpp"

namespace kleinpencil {

using Json = nlohmann::ordered_json;

struct curve_parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// [[j, "a/b"], ...] with ascending exponents j < phi(n); [] is zero.
Json cyc_to_wire(const CycNum& x);
CycNum cyc_from_wire(const FieldCtxPtr& ctx, const Json& j);

Json curve_to_json(const TernaryForm& f, const std::string& label = "");
TernaryForm curve_from_json(const FieldCtxPtr& ctx, const Json& j);

TernaryForm load_curve(const std::string& path, const FieldCtxPtr& ctx);
void save_curve(const std::string& path, const TernaryForm& f, const std::string& label = "");

// { "version": 1, "rows": [ {g, n, e_min, fibers, feasible, reason, axioms} ] }
Json sweep_to_json(const std::vector<ScenarioRow>& rows);

}  // namespace kleinpencil
