#pragma once

#include <string>

#include "abelroot/exact/upoly.hpp"

namespace abelroot {

/// Rational function num/den in one variable. Canonical: den monic,
/// gcd(num, den) = 1, zero is 0/1.
class RatFunc {
 public:
  explicit RatFunc(Var v = Var::Q);
  RatFunc(const UPoly& num);  // NOLINT(google-explicit-constructor)
  RatFunc(const UPoly& num, const UPoly& den);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  Var var() const { return num_.var(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  double eval(double t) const { return num_.eval(t) / den_.eval(t); }
  std::string str() const;

 private:
  UPoly num_;
  UPoly den_;
};

}  // namespace abelroot
