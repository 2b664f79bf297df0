#pragma once

#include "json.hpp"

#include "lucaszeta/quadfield.hpp"
#include "lucaszeta/series.hpp"

namespace lucaszeta {

using Json = nlohmann::ordered_json;

// Complex numbers serialize as decimal strings with an explicit precision
// tag; rationals as canonical "num/den". Both re-parse losslessly.
Json complex_to_json(const Complex& z, long prec);
Complex complex_from_json(const Json& j);

Json eval_result_to_json(const EvalResult& r, long prec);

Json quad_to_json(const QuadExt& x);

// Decimal-string form used everywhere a bound is reported.
std::string bound_str(const Real& r);

} // namespace lucaszeta
