#pragma once

#include <array>
#include <complex>
#include <string>

#include "abelroot/exact/rational.hpp"

namespace abelroot {

enum class ClosedFormMethod { Babylonian, Cardano, VietaTrig, VietaHyp, Ferrari, QuarticW };

const char* to_string(ClosedFormMethod m);
/// Throws Usage on an unknown name.
ClosedFormMethod closed_form_method(const std::string& name);

struct ClosedFormRoot {
  ClosedFormMethod method = ClosedFormMethod::Babylonian;
  double value = 0.0;
  std::string validity;
};

/// Branch through the origin of x^n + p x - q = 0 by the named formula:
///   babylonian  n = 2
///   cardano, vieta_trig, vieta_hyp  n = 3
///   ferrari, quartic_w  n = 4
/// Throws OutOfDomain when the formula is not real-valued at (p, q), and
/// Usage when the method does not fit n.
ClosedFormRoot closed_form_root(ClosedFormMethod method, int n, double p, double q);

/// Root of x^4 + c x^2 + d x + e = 0 continuing 0 when e -> 0 along the
/// largest root of the resolvent; throws OutOfDomain for d = 0.
double ferrari_root(double c, double d, double e);

/// All four roots of x^4 + c x^2 + d x + e from one resolvent root.
std::array<std::complex<double>, 4> ferrari_roots(double c, double d, double e);

/// The four roots of y^4 + c y^2 + e = 0.
std::array<std::complex<double>, 4> biquadratic_roots(double c, double e);

/// y^3 + p y + q after x = y - b/3.
struct DepressedCubic {
  Rat p;
  Rat q;
  Rat shift;  // x = y + shift
};
DepressedCubic depress_cubic(const Rat& b, const Rat& c, const Rat& d);

/// y^4 + c y^2 + d y + e after x = y - a3/4.
struct DepressedQuartic {
  Rat c;
  Rat d;
  Rat e;
  Rat shift;  // x = y + shift
};
DepressedQuartic depress_quartic(const Rat& a3, const Rat& a2, const Rat& a1, const Rat& a0);

/// Largest real root of v^3 + a v^2 + b v + c.
double largest_real_root_cubic(double a, double b, double c);

}  // namespace abelroot
