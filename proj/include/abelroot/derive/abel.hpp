#pragma once

#include <vector>

#include "abelroot/derive/factorization.hpp"
#include "abelroot/exact/ratfunc.hpp"

namespace abelroot {

/// x' = sum_j a_j(q) x^j on the branch through the origin, with
/// a_j = w_j / D where R'(x) U(x) = Q(x, q) P(x, q) + W(x, q).
struct AbelODE {
  int n = 0;
  UPoly d{Var::Q};
  BiPoly w;         // remainder W, degree <= n - 1 in x
  BiPoly quotient;  // Q
  std::vector<RatFunc> a;  // a[j], j = 0..n-1

  /// Right-hand side evaluated in floating point; W(x, q) / D(q).
  double rhs(double q, double x) const;
};

AbelODE abel_ode(const ProblemSpec& spec, const Factorization& f);
AbelODE abel_ode(const ProblemSpec& spec);

}  // namespace abelroot
