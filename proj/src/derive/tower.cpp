#include "abelroot/derive/tower.hpp"

#include "abelroot/error.hpp"

namespace abelroot {

BiPoly tower_step(const BiPoly& a, int m, const BiPoly& c1, const UPoly& d) {
  return derivative_main(a) * c1 + derivative_coeff(a) * d - a * (derivative(d) * Rat(m));
}

DerivativeTower derivative_tower(const ProblemSpec& spec, const AbelODE& abel, int k_max) {
  if (k_max < 1) throw Error(ErrorCode::InvalidProblem, "tower height must be at least 1");
  DerivativeTower t;
  t.n = abel.n;
  t.d = abel.d;
  const BiPoly p = spec.p();
  BiPoly current = abel.w;
  UPoly d_power = abel.d;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) {
      // On the branch x' = W / D, and A_x R'U differs from A_x W by a multiple of P.
      current = divrem_main(tower_step(current, k - 1, abel.w, abel.d), p).second;
      d_power *= abel.d;
    }
    std::vector<RatFunc> row;
    row.reserve(static_cast<std::size_t>(t.n));
    for (int j = 0; j < t.n; ++j) row.emplace_back(current.coeff(j), d_power);
    t.rows.push_back(std::move(row));
    t.numerators.push_back(current);
  }
  return t;
}

DerivativeTower derivative_tower(const ProblemSpec& spec, int k_max) {
  return derivative_tower(spec, abel_ode(spec), k_max);
}

}  // namespace abelroot
