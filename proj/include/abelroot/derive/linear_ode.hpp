#pragma once

#include <vector>

#include "abelroot/derive/tower.hpp"

namespace abelroot {

/// sum_{k=0}^{order} b[k](q) x^(k) + b[order+1](q) = 0, order = n - 1.
/// b[0] multiplies x itself and the last entry is the inhomogeneous term.
struct LinearODE {
  int order = 0;
  std::vector<UPoly> b;
  int kernel_dimension = 1;
  bool ambiguous_kernel = false;

  const UPoly& coeff(int k) const { return b[static_cast<std::size_t>(k)]; }
  const UPoly& inhomogeneous() const { return b.back(); }
  friend bool operator==(const LinearODE& l, const LinearODE& r) { return l.order == r.order && l.b == r.b; }
};

/// Removes common polynomial factors, clears denominators to coprime
/// integers and makes the leading coefficient of the highest derivative
/// term positive. Idempotent.
LinearODE normalize(LinearODE ode);

/// Left kernel of the tower against (x, 1): the order-(n-1) linear ODE.
/// Throws EmptyKernel on a rank-deficient system (never expected); a kernel
/// of dimension > 1 yields the basis vector of least total degree and sets
/// ambiguous_kernel.
LinearODE linear_ode(const ProblemSpec& spec, const DerivativeTower& tower);
LinearODE linear_ode(const ProblemSpec& spec);

/// Residual of the ODE after substituting the tower rows, as coefficients
/// of x^j (j = 0..n-1). All zero for a correct annihilator.
std::vector<RatFunc> tower_residual(const LinearODE& ode, const DerivativeTower& tower);

}  // namespace abelroot
