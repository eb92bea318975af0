#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "abelroot/exact/rational.hpp"

namespace abelroot {

/// Which indeterminate a univariate polynomial is written in.
enum class Var { X, Q };

char var_name(Var v);

/// Dense univariate polynomial over the rationals. coeffs()[k] is the
/// coefficient of v^k; there are never trailing zeros, so the zero
/// polynomial has an empty coefficient list.
class UPoly {
 public:
  explicit UPoly(Var v = Var::X) : var_(v) {}
  UPoly(Var v, std::vector<Rat> coeffs);
  UPoly(Var v, std::initializer_list<Rat> coeffs) : UPoly(v, std::vector<Rat>(coeffs)) {}

  static UPoly constant(Var v, const Rat& c);
  static UPoly monomial(Var v, const Rat& c, int power);
  static UPoly identity(Var v) { return monomial(v, Rat(1), 1); }

  Var var() const { return var_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int k) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rat lead() const;

  /// Same coefficients, reinterpreted in another variable.
  UPoly with_var(Var v) const { return UPoly(v, coeffs_); }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rat& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rat& c) { return a *= c; }
  friend UPoly operator*(const Rat& c, UPoly a) { return a *= c; }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  Rat eval(const Rat& t) const;
  double eval(double t) const;

  /// "27*q^2 + 4" style text, descending powers.
  std::string str() const;

 private:
  void trim();

  Var var_;
  std::vector<Rat> coeffs_;
};

/// Euclidean division a = quot * b + rem with deg rem < deg b.
std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
/// a / b, throwing NonExactDivision unless the remainder vanishes.
UPoly exact_div(const UPoly& a, const UPoly& b);
/// Monic greatest common divisor; gcd(0, 0) is rejected.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly derivative(const UPoly& a);
UPoly pow(const UPoly& a, unsigned exponent);
/// f(r(v)), written in r's variable.
UPoly compose(const UPoly& f, const UPoly& r);
/// Substitution q <- r(x) of a polynomial in q.
UPoly compose_q(const UPoly& f, const UPoly& r);
UPoly monic(const UPoly& a);

/// Positive rational c with a / c having coprime integer coefficients;
/// the sign is chosen so that a / c has a positive leading coefficient.
Rat integer_content(const UPoly& a);

/// a = square^2 * rest, with rest squarefree up to its constant factor.
struct SquareSplit {
  UPoly square;
  UPoly rest;
};
SquareSplit square_split(const UPoly& a);

std::ostream& operator<<(std::ostream& os, const UPoly& p);

}  // namespace abelroot
