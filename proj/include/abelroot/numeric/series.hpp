#pragma once

#include <vector>

#include "abelroot/derive/linear_ode.hpp"

namespace abelroot {

/// x(q) = sum_{m=1}^{order} c_m q^m, truncated at q^order.
struct SeriesQ {
  UPoly x{Var::Q};
  int order = 0;

  Rat coeff(int m) const { return x.coeff(m); }
  friend bool operator==(const SeriesQ&, const SeriesQ&) = default;
};

/// p(q) with every term of degree > order dropped.
UPoly truncate(const UPoly& p, int order);

/// Exact branch series of R(x) = q at the origin. Throws InvalidProblem when R'(0) = 0.
SeriesQ lagrange_series(const ProblemSpec& spec, int order);

struct SeriesResidual {
  std::vector<Rat> coeffs;  // coefficients of q^0 .. q^valid_order
  int valid_order = -1;     // order - max deg b - ode order; -1 when nothing is provable

  bool is_zero() const;
  /// Index of the first nonzero coefficient, or -1.
  int first_nonzero() const;
};

/// sum_k b_k x^(k) + b_inh evaluated on the series, kept to the orders that
/// truncation cannot affect.
SeriesResidual series_ode_residual(const LinearODE& ode, const SeriesQ& s);

/// pFq(upper; lower; scale * q^power) truncated at q^order.
struct Hypergeometric {
  std::vector<Rat> upper;
  std::vector<Rat> lower;
  Rat scale;
  int power = 1;
};

/// Throws ParameterPole when a lower parameter is a nonpositive integer.
UPoly hypergeometric_series(const Hypergeometric& h, int order);

/// q/p * 3F2(1/4, 1/2, 3/4; 2/3, 4/3; -256 q^3 / (27 p^4)).
SeriesQ quartic_series_3f2(const Rat& p, int order);

/// q/p * 2F1(-1/24, 5/24; 2/3; z) * 2F1(7/24, 13/24; 4/3; z), z = -256 q^3 / (27 p^4).
SeriesQ quartic_series_2f1(const Rat& p, int order);

}  // namespace abelroot
