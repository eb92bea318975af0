#pragma once

#include <string>

#include "abelroot/derive/factorization.hpp"

namespace abelroot {

enum class IntegrandKind { Theorem1, Corollary2 };

/// A positive scalar rational * sqrt(radicand); lets weights such as
/// 5*sqrt(5)*x stay exact while the polynomial part remains rational.
struct Surd {
  Rat rational{1};
  Rat radicand{1};
  double value() const;
  std::string str() const;
};

/// How the overall sign of the x-side integrand is fixed.
enum class SignRule {
  Fixed,               // the stored sign
  DerivativeOnInterval // sign of R'(s) on the interval between 0 and x
};

/// One side of a separated-variables identity:
///   sign * scale * numerator(s) / (|rational_den(s)| * sqrt(radicand(s)))   (radical)
///   sign * scale * numerator(s) / rational_den(s)                           (rational)
struct IntegrandSide {
  UPoly numerator;
  UPoly rational_den;
  UPoly radicand;
  bool radical = false;
  int sign = 1;
  SignRule sign_rule = SignRule::Fixed;
  Surd scale;

  /// Evaluates with the stored sign, or with `interval_sign` under
  /// SignRule::DerivativeOnInterval.
  double eval(double s, int interval_sign = 0) const;
  std::string str() const;
};

struct IntegrandSpec {
  IntegrandKind kind = IntegrandKind::Theorem1;
  UPoly weight{Var::Q};
  IntegrandSide lhs;  // integrated in x from 0 to the root
  IntegrandSide rhs;  // integrated in t from 0 to q
  bool invertible = true;  // weight(0) != 0, R'(0) != 0 and D(0) != 0
};

struct IntegrandOptions {
  Surd scale;
  /// Accept weight(0) = 0 or R'(0) = 0 and fall back to the interval sign
  /// rule; the identity still holds but the x-side map is not invertible at 0.
  bool degenerate_ok = false;
};

/// Throws WeightZeroAtOrigin when weight(0) = 0 without `degenerate_ok`.
IntegrandSpec build_integrands(const ProblemSpec& spec, const Factorization& f, const UPoly& weight,
                               IntegrandKind kind, const IntegrandOptions& opts = {});

}  // namespace abelroot
