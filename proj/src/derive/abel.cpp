#include "abelroot/derive/abel.hpp"

#include "abelroot/error.hpp"

namespace abelroot {

double AbelODE::rhs(double q, double x) const { return w.eval(x, q) / d.eval(q); }

AbelODE abel_ode(const ProblemSpec& spec, const Factorization& f) {
  AbelODE ode;
  ode.n = spec.degree();
  ode.d = f.d;
  const BiPoly c1 = BiPoly::from_main(f.r_prime * f.u);
  const BiPoly p = spec.p();
  auto [quot, rem] = divrem_main(c1, p);
  if (quot * p + rem != c1)
    throw Error(ErrorCode::NonExactDivision, "R'U = Q P + W reconstruction failed");
  ode.quotient = std::move(quot);
  ode.w = std::move(rem);
  ode.a.reserve(static_cast<std::size_t>(ode.n));
  for (int j = 0; j < ode.n; ++j) ode.a.emplace_back(ode.w.coeff(j), f.d);
  return ode;
}

AbelODE abel_ode(const ProblemSpec& spec) { return abel_ode(spec, factorize(spec)); }

}  // namespace abelroot
