#pragma once

#include "abelroot/derive/problem.hpp"

namespace abelroot {

/// D(R(x)) = R'(x)^2 U(x), together with the sign-normalised pair used by
/// the separated-variables integrals.
struct Factorization {
  UPoly d;         // discriminant of R(x) - q in x, a polynomial in q
  UPoly u;         // D(R(x)) / R'(x)^2
  UPoly script_d;  // sign_d * D, positive just to the right of q = 0
  UPoly script_u;  // script_d(R(x)) / R'(x)^2
  UPoly r_prime;
  int sign_d = 0;        // sign of D(0), or of the lowest nonzero term when D(0) = 0
  int sign_r_prime0 = 0; // sign of R'(0); 0 when R'(0) = 0
  bool simple_roots = true;  // D(0) != 0, i.e. R has simple roots
  bool degree_ok = true;     // deg U == (n-1)(n-2)
};

/// Throws NonExactDivision if R'^2 does not divide D(R(x)).
Factorization factorize(const ProblemSpec& spec);

}  // namespace abelroot
