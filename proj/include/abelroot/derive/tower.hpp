#pragma once

#include <vector>

#include "abelroot/derive/abel.hpp"

namespace abelroot {

/// x^(k) = B_k(x, q) / D(q)^k = sum_j a_{k,j}(q) x^j on the branch, k = 1..k_max.
struct DerivativeTower {
  int n = 0;
  UPoly d{Var::Q};
  std::vector<BiPoly> numerators;           // numerators[k-1] = B_k, degree <= n - 1 in x
  std::vector<std::vector<RatFunc>> rows;   // rows[k-1][j] = a_{k,j}

  int height() const { return static_cast<int>(numerators.size()); }
};

/// Applies v = A/D^m  ->  v' = (A_x W + A_q D - m A D') / D^(m+1), reducing
/// each numerator modulo P so every row stays of degree <= n - 1 in x.
DerivativeTower derivative_tower(const ProblemSpec& spec, const AbelODE& abel, int k_max);
DerivativeTower derivative_tower(const ProblemSpec& spec, int k_max);

/// One step of the recursion without reduction: A_x * c1 + A_q * D - m * A * D'.
BiPoly tower_step(const BiPoly& a, int m, const BiPoly& c1, const UPoly& d);

}  // namespace abelroot
