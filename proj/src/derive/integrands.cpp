#include "abelroot/derive/integrands.hpp"

#include <cmath>
#include <sstream>

#include "abelroot/error.hpp"

namespace abelroot {

double Surd::value() const { return rational.to_double() * std::sqrt(radicand.to_double()); }

std::string Surd::str() const {
  if (radicand == Rat(1)) return rational.str();
  return (rational == Rat(1) ? std::string() : rational.str() + "*") + "sqrt(" + radicand.str() + ")";
}

double IntegrandSide::eval(double s, int interval_sign) const {
  const int sg = sign_rule == SignRule::Fixed ? sign : interval_sign;
  const double num = static_cast<double>(sg) * scale.value() * numerator.eval(s);
  if (!radical) return num / rational_den.eval(s);
  return num / (std::abs(rational_den.eval(s)) * std::sqrt(radicand.eval(s)));
}

std::string IntegrandSide::str() const {
  std::ostringstream os;
  if (sign_rule == SignRule::DerivativeOnInterval)
    os << "sgn(R') * ";
  else if (sign < 0)
    os << "-";
  if (!(scale.rational == Rat(1) && scale.radicand == Rat(1))) os << scale.str() << " * ";
  os << "(" << numerator.str() << ")/(";
  const bool has_rational = rational_den.degree() > 0 || rational_den.coeff(0) != Rat(1);
  if (radical) {
    if (has_rational) os << "|" << rational_den.str() << "|*";
    os << "sqrt(" << radicand.str() << ")";
  } else {
    os << rational_den.str();
  }
  os << ")";
  return os.str();
}

namespace {

// sqrt(p) = |square| * sqrt(rest) with `square` primitive over Z.
void split_radical(const UPoly& p, IntegrandSide& side) {
  auto [square, rest] = square_split(p);
  const Rat c = integer_content(square);
  side.rational_den = square * (Rat(1) / c);
  side.radicand = rest * (c * c);
  side.radical = true;
}

}  // namespace

IntegrandSpec build_integrands(const ProblemSpec& spec, const Factorization& f, const UPoly& weight,
                               IntegrandKind kind, const IntegrandOptions& opts) {
  if (weight.var() != Var::Q) throw Error(ErrorCode::VariableMismatch, "weight must be a polynomial in t (q)");
  if (weight.is_zero()) throw Error(ErrorCode::WeightZeroAtOrigin, "weight is identically zero");
  const bool weight_ok = !weight.coeff(0).is_zero();
  const bool degenerate = !weight_ok || f.sign_r_prime0 == 0 || !f.simple_roots;
  if (!weight_ok && !opts.degenerate_ok)
    throw Error(ErrorCode::WeightZeroAtOrigin, "weight vanishes at 0; enable the degenerate (non-invertible) path");
  if (f.sign_r_prime0 == 0 && !opts.degenerate_ok)
    throw Error(ErrorCode::InvalidProblem, "R'(0) = 0; enable the degenerate (non-invertible) path");

  IntegrandSpec out;
  out.kind = kind;
  out.weight = weight;
  out.invertible = !degenerate;

  const UPoly weight_of_r = compose(weight, spec.r());
  out.lhs.numerator = weight_of_r;
  out.rhs.numerator = weight.with_var(Var::Q);
  out.lhs.scale = opts.scale;
  out.rhs.scale = opts.scale;

  if (kind == IntegrandKind::Theorem1) {
    split_radical(f.script_u, out.lhs);
    split_radical(f.script_d, out.rhs);
    if (f.sign_r_prime0 != 0) {
      out.lhs.sign = f.sign_r_prime0;
    } else {
      out.lhs.sign_rule = SignRule::DerivativeOnInterval;
      out.lhs.sign = 0;
    }
  } else {
    out.lhs.rational_den = f.r_prime * f.u;
    out.lhs.radicand = UPoly::constant(Var::X, Rat(1));
    out.rhs.rational_den = f.d;
    out.rhs.radicand = UPoly::constant(Var::Q, Rat(1));
  }
  return out;
}

}  // namespace abelroot
