#include "abelroot/derive/problem.hpp"

#include "abelroot/error.hpp"

namespace abelroot {

ProblemSpec::ProblemSpec(UPoly r) : r_(std::move(r)) {
  if (r_.var() != Var::X) throw Error(ErrorCode::InvalidProblem, "R must be a polynomial in x");
  if (r_.degree() < 2) throw Error(ErrorCode::InvalidProblem, "R must have degree at least 2");
  if (!r_.coeff(0).is_zero()) throw Error(ErrorCode::InvalidProblem, "R(0) must vanish");
}

ProblemSpec trinomial(int n, const Rat& p) {
  UPoly r = UPoly::monomial(Var::X, Rat(1), n) + UPoly::monomial(Var::X, p, 1);
  return ProblemSpec(std::move(r));
}

}  // namespace abelroot
