#pragma once

#include <functional>

#include "abelroot/derive/integrands.hpp"

namespace abelroot {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

/// Globally adaptive Gauss-Kronrod 7-15 until the summed error estimate is at
/// most tol * (1 + |value|). Endpoints are never sampled. Throws
/// NonConvergence when an interval would be bisected past depth 40.
QuadResult quad(const std::function<double(double)>& f, double a, double b, double tol = 1e-12);

/// Integral of one side of a separated identity over [a, b]. Throws
/// SingularIntegrand if the radicand or the reduced denominator has a real
/// zero strictly inside the interval.
QuadResult quad(const IntegrandSide& side, double a, double b, double tol = 1e-12, int interval_sign = 0);

struct IdentityCheck {
  double lhs = 0.0;  // phi(x)
  double rhs = 0.0;  // varphi(q)
  double diff = 0.0;
};

/// phi(x) against varphi(q) for a root x of R(x) = q on the branch.
IdentityCheck check_identity(const ProblemSpec& spec, const IntegrandSpec& in, double q, double x,
                             double tol = 1e-12);

/// int_0^{x^2} u / sqrt(u (u^3 + 4u^2 - 8u + 12)) du against
/// int_0^q 2 / (5 sqrt(t^2 + 108)) dt, for x^5 + 5x^3 = q.
IdentityCheck check_betti_identity(double q, double x, double tol = 1e-12);

/// x in [lo, hi] with |phi(x) - target| <= 1e-10, where phi(x) = int_0^x side.
/// Throws BadBracket when phi - target does not change sign on the bracket.
double invert_phi(const IntegrandSide& side, double target, double lo, double hi, int interval_sign = 0);

}  // namespace abelroot
