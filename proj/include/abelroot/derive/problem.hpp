#pragma once

#include "abelroot/exact/bipoly.hpp"
#include "abelroot/exact/upoly.hpp"

namespace abelroot {

/// The equation R(x) - q = 0 with R(0) = 0 and deg R >= 2.
class ProblemSpec {
 public:
  /// Throws InvalidProblem unless R is in x, R(0) = 0 and deg R >= 2.
  explicit ProblemSpec(UPoly r);

  const UPoly& r() const { return r_; }
  int degree() const { return r_.degree(); }
  /// P(x, q) = R(x) - q.
  BiPoly p() const { return BiPoly::shifted(r_); }
  UPoly r_prime() const { return derivative(r_); }
  Rat r_prime_at_zero() const { return r_.coeff(1); }

 private:
  UPoly r_;
};

/// x^n + p x.
ProblemSpec trinomial(int n, const Rat& p);

}  // namespace abelroot
