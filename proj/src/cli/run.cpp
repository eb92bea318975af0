#include "abelroot/cli/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "abelroot/cli/demo.hpp"
#include "abelroot/cli/latex.hpp"
#include "abelroot/cli/parse.hpp"
#include "abelroot/derive/linear_ode.hpp"
#include "abelroot/derive/trinomial.hpp"
#include "abelroot/numeric/closed_form.hpp"
#include "abelroot/numeric/quad.hpp"
#include "abelroot/numeric/series.hpp"
#include "abelroot/numeric/track.hpp"

namespace abelroot {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "text") return Format::Text;
  if (name == "latex") return Format::Latex;
  throw Error(ErrorCode::Usage, "unknown format '" + name + "' (json, text, latex)");
}

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v = {"derive-abel", "derive-linear", "discriminant", "solve",
                                             "check",       "demo",          "series"};
  return v;
}

double parse_q(const std::string& text) {
  try {
    return Rat::parse(text).to_double();
  } catch (const Error&) {
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || used == 0 || !std::isfinite(v))
    throw Error(ErrorCode::Usage, "--q expects a rational or a decimal number, got '" + text + "'");
  return v;
}

namespace {

// x^n + p x with n in 2..6, as (n, p).
std::optional<std::pair<int, Rat>> as_trinomial(const UPoly& r) {
  const int n = r.degree();
  if (r.lead() != Rat(1) || r.coeff(1).is_zero()) return std::nullopt;
  for (int k = 2; k < n; ++k)
    if (!r.coeff(k).is_zero()) return std::nullopt;
  return std::make_pair(n, r.coeff(1));
}

double require_q(const Command& cmd) {
  if (!cmd.q) throw Error(ErrorCode::Usage, cmd.verb + " needs --q");
  return parse_q(*cmd.q);
}

TrackOptions track_options(const Command& cmd) {
  TrackOptions o;
  o.abs_tol = cmd.tol_abs;
  o.rel_tol = cmd.tol_rel;
  return o;
}

std::vector<ClosedFormMethod> methods_for(int n) {
  switch (n) {
    case 2: return {ClosedFormMethod::Babylonian};
    case 3: return {ClosedFormMethod::Cardano, ClosedFormMethod::VietaTrig, ClosedFormMethod::VietaHyp};
    case 4: return {ClosedFormMethod::Ferrari, ClosedFormMethod::QuarticW};
    default: return {};
  }
}

json track_json(const TrackResult& t) {
  json j = {{"q", t.q_target},         {"x", t.x},           {"residual", t.residual},
            {"q_reached", t.q_reached}, {"steps", t.steps},   {"rejected_steps", t.rejected},
            {"polish_iterations", t.polish_iters}, {"track_status", to_string(t.status)}};
  if (t.q_star) j["q_star"] = *t.q_star;
  return j;
}

json derive_abel(const Command& cmd, Report& rep) {
  const auto spec = parse_problem(cmd.problem);
  const auto ode = abel_ode(spec);
  rep.latex = render_latex(ode);
  json r = to_json(ode);
  r["latex"] = rep.latex;
  return r;
}

json derive_linear(const Command& cmd, Report& rep) {
  const auto spec = parse_problem(cmd.problem);
  const auto ode = linear_ode(spec);
  rep.latex = render_latex(ode);
  json r = to_json(ode);
  r["latex"] = rep.latex;
  if (auto t = as_trinomial(spec.r()); t && t->first >= 3 && t->first <= 6)
    r["matches_trinomial_table"] = ode == reference_trinomial_ode(t->first, t->second);
  return r;
}

json discriminant_verb(const Command& cmd, Report& rep) {
  const auto spec = parse_problem(cmd.problem);
  const auto f = factorize(spec);
  rep.latex = "D(q)=" + latex_poly(f.d) + ",\\quad U(x)=" + latex_poly(f.u);
  return {{"d", to_json(f.d)},
          {"u", to_json(f.u)},
          {"script_d", to_json(f.script_d)},
          {"script_u", to_json(f.script_u)},
          {"sign_d", f.sign_d},
          {"simple_roots", f.simple_roots},
          {"u_degree_ok", f.degree_ok},
          {"latex", rep.latex}};
}

json solve(const Command& cmd, Report& rep, std::string& status) {
  const auto spec = parse_problem(cmd.problem);
  const double q = require_q(cmd);
  const auto t = track_root(spec, q, track_options(cmd));
  json r = track_json(t);
  status = to_string(t.status);
  if (t.status != TrackStatus::Ok) rep.exit_code = 2;
  if (auto tri = as_trinomial(spec.r()); tri && t.status == TrackStatus::Ok) {
    std::vector<ClosedFormMethod> ms = methods_for(tri->first);
    if (!cmd.method.empty()) ms = {closed_form_method(cmd.method)};
    json oracles = json::array();
    for (auto m : ms) {
      try {
        const auto c = closed_form_root(m, tri->first, tri->second.to_double(), q);
        oracles.push_back({{"method", to_string(m)}, {"value", c.value}, {"diff", std::abs(c.value - t.x)}});
      } catch (const Error& e) {
        if (!cmd.method.empty()) throw;
        oracles.push_back({{"method", to_string(m)}, {"error", to_json(e)}});
      }
    }
    r["oracles"] = oracles;
  }
  return r;
}

json check(const Command& cmd, Report& rep, std::string& status) {
  const auto spec = parse_problem(cmd.problem);
  const double q = require_q(cmd);
  IntegrandKind kind;
  if (cmd.kind == "theorem1")
    kind = IntegrandKind::Theorem1;
  else if (cmd.kind == "corollary2")
    kind = IntegrandKind::Corollary2;
  else
    throw Error(ErrorCode::Usage, "unknown kind '" + cmd.kind + "' (theorem1, corollary2)");
  const auto t = track_root(spec, q, track_options(cmd));
  json r = {{"track", track_json(t)}};
  if (t.status != TrackStatus::Ok) {
    status = to_string(t.status);
    rep.exit_code = 2;
    return r;
  }
  const auto f = factorize(spec);
  const auto in = build_integrands(spec, f, parse_weight(cmd.weight), kind);
  const auto id = check_identity(spec, in, q, t.x);
  const bool id_ok = id.diff <= 1e-8;
  r["identity"] = {{"lhs", id.lhs},
                   {"rhs", id.rhs},
                   {"diff", id.diff},
                   {"pass", id_ok},
                   {"lhs_integrand", in.lhs.str()},
                   {"rhs_integrand", in.rhs.str()}};
  const int m = 2 * spec.degree() + 6;
  const auto res = series_ode_residual(linear_ode(spec), lagrange_series(spec, m));
  const bool series_ok = res.valid_order >= 0 && res.is_zero();
  r["series"] = {{"terms", m}, {"valid_order", res.valid_order}, {"zero", series_ok}};
  status = id_ok && series_ok ? "ok" : "fail";
  if (status != "ok") rep.exit_code = 2;
  return r;
}

json series(const Command& cmd) {
  const auto spec = parse_problem(cmd.problem);
  if (cmd.order < 1 || cmd.order > 200) throw Error(ErrorCode::Usage, "--order must be in 1..200");
  const auto s = lagrange_series(spec, cmd.order);
  json coeffs = json::array();
  for (int m = 1; m <= cmd.order; ++m) coeffs.push_back(s.coeff(m).str());
  const auto res = series_ode_residual(linear_ode(spec), s);
  return {{"order", cmd.order},
          {"coeffs", coeffs},
          {"ode_residual",
           {{"valid_order", res.valid_order}, {"zero", res.is_zero()}, {"first_nonzero", res.first_nonzero()}}}};
}

json demo(const Command& cmd, Report& rep, std::string& status) {
  const auto checks = run_demo(cmd.problem);
  json arr = json::array();
  bool all = true;
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    all = all && c.pass;
  }
  status = all ? "ok" : "fail";
  if (!all) rep.exit_code = 2;
  return {{"demo", cmd.problem}, {"checks", arr}, {"pass", all}};
}

json input_json(const Command& cmd) {
  json in = {{"problem", cmd.problem}};
  if (cmd.q) in["q"] = *cmd.q;
  if (cmd.verb == "series") in["order"] = cmd.order;
  if (cmd.verb == "check") {
    in["weight"] = cmd.weight;
    in["kind"] = cmd.kind;
  }
  if (cmd.verb == "solve" && !cmd.method.empty()) in["method"] = cmd.method;
  if (cmd.verb == "solve" || cmd.verb == "check") {
    in["tol_abs"] = cmd.tol_abs;
    in["tol_rel"] = cmd.tol_rel;
  }
  return in;
}

}  // namespace

Report run(const Command& cmd) {
  Report rep;
  rep.doc = {{"verb", cmd.verb}, {"input", input_json(cmd)}, {"result", nullptr}, {"status", "ok"},
             {"errors", json::array()}};
  const auto start = std::chrono::steady_clock::now();
  std::string status = "ok";
  try {
    json result;
    if (cmd.verb == "derive-abel")
      result = derive_abel(cmd, rep);
    else if (cmd.verb == "derive-linear")
      result = derive_linear(cmd, rep);
    else if (cmd.verb == "discriminant")
      result = discriminant_verb(cmd, rep);
    else if (cmd.verb == "solve")
      result = solve(cmd, rep, status);
    else if (cmd.verb == "check")
      result = check(cmd, rep, status);
    else if (cmd.verb == "series")
      result = series(cmd);
    else if (cmd.verb == "demo")
      result = demo(cmd, rep, status);
    else
      throw Error(ErrorCode::Usage, "unknown verb '" + cmd.verb + "'");
    rep.doc["result"] = std::move(result);
  } catch (const Error& e) {
    status = "error";
    rep.doc["errors"].push_back(to_json(e));
    rep.exit_code = exit_code_for(e.code());
  }
  rep.doc["status"] = status;
  if (cmd.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rep.doc["timing_ms"] = ms;
  }
  return rep;
}

namespace {

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  const bool leaf_array = j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !leaf_array) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

}  // namespace

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::Json: return r.doc.dump(2) + "\n";
    case Format::Latex:
      if (!r.latex.empty()) return r.latex + "\n";
      if (!r.doc["errors"].empty()) return render(r, Format::Text);
      throw Error(ErrorCode::Usage, "no LaTeX rendering for '" + r.doc["verb"].get<std::string>() + "'");
    case Format::Text: break;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("verb", r.doc["verb"].get<std::string>());
  rows.emplace_back("status", r.doc["status"].get<std::string>());
  flatten(r.doc["input"], "input", rows);
  if (!r.doc["result"].is_null()) flatten(r.doc["result"], "", rows);
  for (std::size_t i = 0; i < r.doc["errors"].size(); ++i)
    rows.emplace_back("error[" + std::to_string(i) + "]", r.doc["errors"][i]["message"].get<std::string>());
  if (r.doc.contains("timing_ms")) rows.emplace_back("timing_ms", r.doc["timing_ms"].dump());
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
  return os.str();
}

}  // namespace abelroot
