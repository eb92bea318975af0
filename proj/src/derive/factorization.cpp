#include "abelroot/derive/factorization.hpp"

#include "abelroot/error.hpp"
#include "abelroot/exact/resultant.hpp"

namespace abelroot {

namespace {

// Sign of D on a right neighbourhood of 0.
int sign_near_zero(const UPoly& d) {
  for (const auto& c : d.coeffs())
    if (!c.is_zero()) return c.sign();
  return 0;
}

}  // namespace

Factorization factorize(const ProblemSpec& spec) {
  Factorization f;
  const int n = spec.degree();
  f.d = discriminant(spec.p());
  f.r_prime = spec.r_prime();
  const UPoly rp2 = f.r_prime * f.r_prime;

  auto [u, rem] = divrem(compose_q(f.d, spec.r()), rp2);
  if (!rem.is_zero())
    throw Error(ErrorCode::NonExactDivision, "D(R(x)) is not divisible by R'(x)^2 for R = " + spec.r().str());
  f.u = std::move(u);

  f.simple_roots = !f.d.coeff(0).is_zero();
  f.sign_d = sign_near_zero(f.d);
  f.sign_r_prime0 = spec.r_prime_at_zero().sign();
  f.script_d = f.d * Rat(f.sign_d);
  f.script_u = f.u * Rat(f.sign_d);
  f.degree_ok = f.u.degree() == (n - 1) * (n - 2);
  return f;
}

}  // namespace abelroot
