#include "abelroot/cli/latex.hpp"

#include <gmpxx.h>

namespace abelroot {

namespace {

std::string latex_rat(const Rat& r) {
  if (r.is_integer()) return r.str();
  const Rat a = abs(r);
  std::string s = "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
  return r.sign() < 0 ? "-" + s : s;
}

std::string var_power(char v, int k) {
  if (k == 0) return "";
  if (k == 1) return std::string(1, v);
  return std::string(1, v) + "^{" + std::to_string(k) + "}";
}

// Coefficient c in front of `tail`; a unit coefficient is elided unless the tail is empty.
std::string scaled(const Rat& c, const std::string& tail) {
  if (tail.empty()) return latex_rat(c);
  if (c == Rat(1)) return tail;
  if (c == Rat(-1)) return "-" + tail;
  return latex_rat(c) + tail;
}

std::string join_signed(std::string acc, const std::string& term) {
  if (acc.empty()) return term;
  if (!term.empty() && term[0] == '-') return acc + term;
  return acc + "+" + term;
}

int term_count(const UPoly& p) {
  int n = 0;
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) ++n;
  return n;
}

// Multiplier making num and den integer polynomials with coprime contents and den's lead positive.
Rat integer_scale(const UPoly& num, const UPoly& den) {
  mpz_class l = 1;
  for (const UPoly* p : {&num, &den})
    for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  mpz_class g = 0;
  for (const UPoly* p : {&num, &den})
    for (const auto& c : p->coeffs()) {
      const mpz_class v = (c * Rat(l)).numerator();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  Rat s = Rat(l) / Rat(g);
  if (den.lead().sign() < 0) s = -s;
  return s;
}

std::string derivative(int k) { return "x" + std::string(static_cast<std::size_t>(k), '\''); }

}  // namespace

std::string latex_poly(const UPoly& p) {
  if (p.is_zero()) return "0";
  const char v = var_name(p.var());
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat& c = p.coeff(k);
    if (c.is_zero()) continue;
    out = join_signed(out, scaled(c, var_power(v, k)));
  }
  return out;
}

std::string render_latex(const LinearODE& ode) {
  std::string out;
  for (int k = ode.order; k >= 0; --k) {
    const UPoly& b = ode.coeff(k);
    if (b.is_zero()) continue;
    const std::string dx = derivative(k);
    std::string term;
    if (term_count(b) == 1) {
      const int d = b.degree();
      term = scaled(b.coeff(d), var_power('q', d) + dx);
    } else {
      term = "(" + latex_poly(b) + ")" + dx;
    }
    out = join_signed(out, term);
  }
  if (!ode.inhomogeneous().is_zero()) {
    const UPoly& c = ode.inhomogeneous();
    out = join_signed(out, term_count(c) == 1 ? latex_poly(c) : "(" + latex_poly(c) + ")");
  }
  if (out.empty()) out = "0";
  return out + "=0";
}

std::string render_latex(const AbelODE& ode) {
  std::string out;
  for (int j = static_cast<int>(ode.a.size()) - 1; j >= 0; --j) {
    const RatFunc& a = ode.a[static_cast<std::size_t>(j)];
    if (a.is_zero()) continue;
    const Rat s = integer_scale(a.num(), a.den());
    UPoly num = a.num() * s;
    const UPoly den = a.den() * s;
    const std::string xj = var_power('x', j);
    std::string term;
    if (den.degree() == 0 && den.coeff(0) == Rat(1)) {
      if (term_count(num) == 1)
        term = scaled(num.lead(), var_power('q', num.degree()) + xj);
      else
        term = xj.empty() ? latex_poly(num) : "(" + latex_poly(num) + ")" + xj;
    } else {
      std::string sign;
      if (term_count(num) == 1 && num.lead().sign() < 0) {
        sign = "-";
        num = -num;
      }
      term = sign + "\\frac{" + latex_poly(num) + "}{" + latex_poly(den) + "}" + xj;
    }
    out = join_signed(out, term);
  }
  return "x'=" + (out.empty() ? std::string("0") : out);
}

}  // namespace abelroot
