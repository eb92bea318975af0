#pragma once

#include <string>

#include "abelroot/derive/linear_ode.hpp"

namespace abelroot {

/// Reference annihilators of x^n + p x - q, n = 3..6:
///   ((n-1)^(n-1) p^n + n^n q^(n-1)) x^(n-1) + sum_{k<n-1} c_{n,k} q^k x^(k) = 0.
/// Returned normalised.
LinearODE reference_trinomial_ode(int n, const Rat& p);

/// Reference annihilator of x^3 + s x^2 + p x - q:
///   (4p^3 + 27q^2 + 18pqs - p^2 s^2 - 4qs^3) x'' + (27q + 9ps - 2s^3) x' - 3x - s = 0.
/// Returned normalised.
LinearODE reference_cubic_ode(const Rat& s, const Rat& p);

struct TrinomialCheck {
  int n = 0;
  Rat p;
  LinearODE derived;
  LinearODE expected;
  bool match = false;
  std::string report;  // both sides printed on mismatch
};

/// Derives the linear ODE for x^n + p x - q and compares it with the reference table.
TrinomialCheck verify_trinomial_table(int n, const Rat& p);

}  // namespace abelroot
