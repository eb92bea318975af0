#pragma once

#include <json.hpp>

#include "abelroot/derive/abel.hpp"
#include "abelroot/derive/linear_ode.hpp"
#include "abelroot/error.hpp"

namespace abelroot {

using json = nlohmann::json;

/// Ascending coefficients as rational strings; the zero polynomial is [].
json to_json(const UPoly& p);
UPoly poly_from_json(const json& j, Var v);

/// {"order", "b": [b_order, ..., b_0, inhomogeneous], ...}
json to_json(const LinearODE& ode);
LinearODE linear_ode_from_json(const json& j);

/// {"n", "d", "w": [W_0, ..., W_{n-1}], "a": [{"num", "den"}, ...]}
json to_json(const AbelODE& ode);

json to_json(const Error& e);

/// 1 for usage and input errors, 2 for domain failures.
int exit_code_for(ErrorCode code);

}  // namespace abelroot
