#pragma once

#include <string>
#include <utility>
#include <vector>

#include "abelroot/exact/upoly.hpp"

namespace abelroot {

/// Polynomial in a main variable (x unless stated otherwise) whose
/// coefficients are univariate polynomials in a second variable, normally q.
/// Entry k is the coefficient of the main variable to the k-th power; no
/// trailing zero entries.
class BiPoly {
 public:
  explicit BiPoly(Var coeff_var = Var::Q) : coeff_var_(coeff_var) {}
  BiPoly(Var coeff_var, std::vector<UPoly> coeffs);

  /// R(x) with every coefficient a constant in `coeff_var`.
  static BiPoly from_main(const UPoly& p, Var coeff_var = Var::Q);
  /// A polynomial in the coefficient variable, of degree 0 in the main one.
  static BiPoly from_coeff(const UPoly& c);
  /// P(x) = R(x) - q.
  static BiPoly shifted(const UPoly& r);

  Var coeff_var() const { return coeff_var_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<UPoly>& coeffs() const { return coeffs_; }
  UPoly coeff(int k) const;
  UPoly lead() const;
  /// Largest degree in the coefficient variable.
  int coeff_degree() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const UPoly& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend BiPoly operator*(BiPoly a, const UPoly& c) { return a *= c; }
  friend BiPoly operator*(const UPoly& c, BiPoly a) { return a *= c; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Fixes the coefficient variable, leaving a polynomial in the main one.
  UPoly at(const Rat& t, Var main_var = Var::X) const;
  double eval(double main, double t) const;

  std::string str() const;

 private:
  void trim();

  Var coeff_var_;
  std::vector<UPoly> coeffs_;
};

/// Division in the main variable by a divisor whose leading coefficient is
/// a nonzero constant (P = R - q is monic up to that constant).
std::pair<BiPoly, BiPoly> divrem_main(const BiPoly& a, const BiPoly& b);
BiPoly derivative_main(const BiPoly& a);
BiPoly derivative_coeff(const BiPoly& a);

}  // namespace abelroot
