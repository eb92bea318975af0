#include "abelroot/cli/demo.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "abelroot/cli/latex.hpp"
#include "abelroot/derive/linear_ode.hpp"
#include "abelroot/derive/trinomial.hpp"
#include "abelroot/numeric/closed_form.hpp"
#include "abelroot/numeric/quad.hpp"
#include "abelroot/numeric/series.hpp"
#include "abelroot/numeric/track.hpp"

namespace abelroot {

namespace {

UPoly poly(Var v, std::initializer_list<long> cs) {
  std::vector<Rat> r;
  for (long c : cs) r.emplace_back(c);
  return UPoly(v, std::move(r));
}

DemoCheck exact(const std::string& name, const UPoly& got, const UPoly& want) {
  return {name, got == want, {{"got", to_json(got)}, {"expected", to_json(want)}}};
}

DemoCheck within(const std::string& name, double value, double tol, json detail = json::object()) {
  detail["value"] = value;
  detail["tolerance"] = tol;
  return {name, std::abs(value) <= tol, detail};
}

std::vector<DemoCheck> babylonian() {
  std::vector<DemoCheck> out;
  const ProblemSpec spec = trinomial(2, Rat(1));
  const auto abel = abel_ode(spec);
  const std::string want = "x'=\\frac{2}{4q+1}x+\\frac{1}{4q+1}";
  const std::string got = render_latex(abel);
  out.push_back({"abel ode", got == want, {{"got", got}, {"expected", want}}});
  const auto in = build_integrands(spec, factorize(spec), poly(Var::Q, {1}), IntegrandKind::Theorem1);
  for (double q : {-0.2, 0.1, 0.5, 1.0, 2.0}) {
    const auto t = track_root(spec, abel, q);
    const double x = closed_form_root(ClosedFormMethod::Babylonian, 2, 1.0, q).value;
    out.push_back(within("tracked vs babylonian", t.x - x, 1e-9, {{"q", q}}));
    out.push_back(within("phi(x) = varphi(q)", check_identity(spec, in, q, x).diff, 1e-8, {{"q", q}}));
  }
  return out;
}

std::vector<DemoCheck> cardano() {
  std::vector<DemoCheck> out;
  const ProblemSpec spec = trinomial(3, Rat(1));
  const auto abel = abel_ode(spec);
  const auto in = build_integrands(spec, factorize(spec), poly(Var::Q, {1}), IntegrandKind::Theorem1);
  for (double q : {-0.3, 0.05, 0.2, 0.3, 0.35}) {
    const auto t = track_root(spec, abel, q);
    const double x = closed_form_root(ClosedFormMethod::Cardano, 3, 1.0, q).value;
    out.push_back(within("tracked vs cardano", t.x - x, 1e-9, {{"q", q}, {"x", x}}));
    out.push_back(within("phi(x) = varphi(q)", check_identity(spec, in, q, x).diff, 1e-8, {{"q", q}}));
  }
  return out;
}

std::vector<DemoCheck> quartic23() {
  std::vector<DemoCheck> out;
  const ProblemSpec spec(poly(Var::X, {0, -1, 2, -2, 1}));
  const auto f = factorize(spec);
  out.push_back(exact("script D", f.script_d, pow(poly(Var::Q, {1, 4}), 2) * poly(Var::Q, {3, 16})));
  out.push_back(exact("script U", f.script_u, pow(poly(Var::X, {1, -2, 2}), 2) * poly(Var::X, {3, -4, 4})));
  const auto in = build_integrands(spec, f, poly(Var::Q, {-2}), IntegrandKind::Theorem1);
  const auto dq = depress_quartic(Rat(-2), Rat(2), Rat(-1), Rat(0));
  for (double q : {0.25, 0.75}) {
    const auto t = track_root(spec, q);
    // 1/2 +- 1/2 sqrt(-1 +- 2 sqrt(1 + 4q))
    const std::complex<double> s = std::sqrt(1.0 + 4.0 * q);
    double best = INFINITY;
    double worst_residual = 0.0;
    const auto depressed = biquadratic_roots(dq.c.to_double(), dq.e.to_double() - q);
    double depressed_gap = 0.0;
    for (int a : {1, -1})
      for (int b : {1, -1}) {
        const std::complex<double> z = 0.5 + 0.5 * double(a) * std::sqrt(-1.0 + 2.0 * double(b) * s);
        worst_residual = std::max(worst_residual, std::abs(z * z * z * z - 2.0 * z * z * z + 2.0 * z * z - z - q));
        if (std::abs(z.imag()) < 1e-12) best = std::min(best, std::abs(z.real() - t.x));
        double nearest = INFINITY;
        for (const auto& y : depressed) nearest = std::min(nearest, std::abs(y + dq.shift.to_double() - z));
        depressed_gap = std::max(depressed_gap, nearest);
      }
    out.push_back(within("closed-form roots solve P", worst_residual, 1e-10, {{"q", q}}));
    out.push_back(within("tracked root is a closed-form root", best, 1e-10, {{"q", q}, {"x", t.x}}));
    out.push_back(within("depressed biquadratic agrees", depressed_gap, 1e-10, {{"q", q}}));
    const auto id = check_identity(spec, in, q, t.x);
    const double pi3 = std::numbers::pi / 3;
    const double lhs = 2 * std::atan((2 * t.x - 1) / std::sqrt(4 * t.x * t.x - 4 * t.x + 3)) + pi3;
    const double rhs = -std::atan(std::sqrt(16 * q + 3)) + pi3;
    out.push_back(within("phi(x) = varphi(q)", id.diff, 1e-8, {{"q", q}}));
    out.push_back(within("arctan closed forms", std::abs(lhs - id.lhs) + std::abs(rhs - id.rhs), 1e-8, {{"q", q}}));
  }
  return out;
}

std::vector<DemoCheck> betti() {
  std::vector<DemoCheck> out;
  const ProblemSpec spec(poly(Var::X, {0, 0, 0, 5, 0, 1}));
  const auto f = factorize(spec);
  out.push_back(exact("script D", f.script_d, poly(Var::Q, {0, 0, 3125}) * poly(Var::Q, {108, 0, 1})));
  out.push_back(exact("script U", f.script_u,
                      poly(Var::X, {0, 0, 125}) * pow(poly(Var::X, {5, 0, 1}), 2) *
                          poly(Var::X, {12, 0, -8, 0, 4, 0, 1})));
  for (double q : {0.5, 1.0, 2.0}) {
    double lo = 0.0, hi = 2.0;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (spec.r().eval(mid) < q ? lo : hi) = mid;
    }
    const double x = 0.5 * (lo + hi);
    out.push_back(within("u-substituted identity", check_betti_identity(q, x).diff, 1e-8, {{"q", q}, {"x", x}}));
  }
  return out;
}

std::vector<DemoCheck> hypergeom() {
  const auto lag = lagrange_series(trinomial(4, Rat(1)), 12);
  const auto x1 = quartic_series_3f2(Rat(1), 12);
  const auto x2 = quartic_series_2f1(Rat(1), 12);
  return {{"3F2 form equals Lagrange series", x1 == lag, {{"x1", to_json(x1.x)}, {"lagrange", to_json(lag.x)}}},
          {"2F1 product equals Lagrange series", x2 == lag, {{"x2", to_json(x2.x)}, {"lagrange", to_json(lag.x)}}}};
}

std::vector<DemoCheck> remark5() {
  std::vector<DemoCheck> out;
  for (long s : {1L, 2L}) {
    const ProblemSpec spec(poly(Var::X, {0, 1, s, 1}));
    const auto got = linear_ode(spec);
    const auto want = reference_cubic_ode(Rat(s), Rat(1));
    out.push_back({"cubic with s = " + std::to_string(s), got == want,
                   {{"got", render_latex(got)}, {"expected", render_latex(want)}}});
  }
  const auto plain = linear_ode(ProblemSpec(poly(Var::X, {0, 1, 0, 1})));
  out.push_back({"s = 0 reduces to the trinomial", plain == reference_trinomial_ode(3, Rat(1)),
                 {{"got", render_latex(plain)}}});
  return out;
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = {"babylonian", "cardano", "quartic23", "betti", "hypergeom", "remark5"};
  return names;
}

std::vector<DemoCheck> run_demo(const std::string& name) {
  if (name == "babylonian") return babylonian();
  if (name == "cardano") return cardano();
  if (name == "quartic23") return quartic23();
  if (name == "betti") return betti();
  if (name == "hypergeom") return hypergeom();
  if (name == "remark5") return remark5();
  throw Error(ErrorCode::Usage, "unknown demo '" + name + "'");
}

}  // namespace abelroot
