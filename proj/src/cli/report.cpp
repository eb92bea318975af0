#include "abelroot/cli/report.hpp"

#include "abelroot/cli/parse.hpp"

namespace abelroot {

json to_json(const UPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

UPoly poly_from_json(const json& j, Var v) {
  if (!j.is_array()) throw Error(ErrorCode::Syntax, "polynomial must be a JSON array");
  std::vector<Rat> cs;
  for (const auto& c : j) {
    if (!c.is_string()) throw Error(ErrorCode::Syntax, "coefficients must be rational strings");
    cs.push_back(Rat::parse(c.get<std::string>()));
  }
  return UPoly(v, std::move(cs));
}

json to_json(const LinearODE& ode) {
  json b = json::array();
  for (int k = ode.order; k >= 0; --k) b.push_back(to_json(ode.coeff(k)));
  b.push_back(to_json(ode.inhomogeneous()));
  return {{"order", ode.order},
          {"b", b},
          {"kernel_dimension", ode.kernel_dimension},
          {"ambiguous_kernel", ode.ambiguous_kernel}};
}

LinearODE linear_ode_from_json(const json& j) {
  LinearODE ode;
  ode.order = j.at("order").get<int>();
  const auto& b = j.at("b");
  if (!b.is_array() || static_cast<int>(b.size()) != ode.order + 2)
    throw Error(ErrorCode::Syntax, "\"b\" must hold order + 2 polynomials");
  for (int k = 0; k <= ode.order; ++k) ode.b.push_back(poly_from_json(b[static_cast<std::size_t>(ode.order - k)], Var::Q));
  ode.b.push_back(poly_from_json(b.back(), Var::Q));
  if (j.contains("kernel_dimension")) ode.kernel_dimension = j["kernel_dimension"].get<int>();
  if (j.contains("ambiguous_kernel")) ode.ambiguous_kernel = j["ambiguous_kernel"].get<bool>();
  return ode;
}

json to_json(const AbelODE& ode) {
  json w = json::array();
  json a = json::array();
  for (int j = 0; j < ode.n; ++j) {
    w.push_back(to_json(ode.w.coeff(j)));
    const auto& r = ode.a[static_cast<std::size_t>(j)];
    a.push_back({{"num", to_json(r.num())}, {"den", to_json(r.den())}});
  }
  return {{"n", ode.n}, {"d", to_json(ode.d)}, {"w", w}, {"a", a}};
}

json to_json(const Error& e) {
  json out = {{"code", to_string(e.code())}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) out["position"] = pe->position();
  return out;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Usage:
    case ErrorCode::Syntax:
    case ErrorCode::InvalidProblem:
    case ErrorCode::VariableMismatch:
      return 1;
    default:
      return 2;
  }
}

}  // namespace abelroot
