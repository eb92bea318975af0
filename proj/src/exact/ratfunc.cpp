#include "abelroot/exact/ratfunc.hpp"

#include "abelroot/error.hpp"

namespace abelroot {

RatFunc::RatFunc(Var v) : num_(v), den_(UPoly::constant(v, Rat(1))) {}

RatFunc::RatFunc(const UPoly& num) : num_(num), den_(UPoly::constant(num.var(), Rat(1))) {}

RatFunc::RatFunc(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.var() != den.var()) throw Error(ErrorCode::VariableMismatch, "numerator and denominator variables differ");
  if (num.is_zero()) {
    num_ = UPoly(num.var());
    den_ = UPoly::constant(num.var(), Rat(1));
    return;
  }
  const UPoly g = gcd(num, den);
  num_ = exact_div(num, g);
  den_ = exact_div(den, g);
  const Rat inv = Rat(1) / den_.lead();
  num_ *= inv;
  den_ *= inv;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  return *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  return *this = RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator*=(const RatFunc& o) { return *this = RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
  return *this = RatFunc(num_ * o.den_, den_ * o.num_);
}

std::string RatFunc::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace abelroot
