#include "abelroot/numeric/series.hpp"

#include <algorithm>

#include "abelroot/error.hpp"

namespace abelroot {

UPoly truncate(const UPoly& p, int order) {
  if (p.degree() <= order) return p;
  const auto& cs = p.coeffs();
  return UPoly(p.var(), std::vector<Rat>(cs.begin(), cs.begin() + order + 1));
}

namespace {

UPoly mul_trunc(const UPoly& a, const UPoly& b, int order) { return truncate(a * b, order); }

// R(x(q)) mod q^(order+1), Horner in the truncated ring.
UPoly compose_trunc(const UPoly& r, const UPoly& x, int order) {
  UPoly acc(Var::Q);
  for (int k = r.degree(); k >= 0; --k) acc = mul_trunc(acc, x, order) + UPoly::constant(Var::Q, r.coeff(k));
  return acc;
}

}  // namespace

SeriesQ lagrange_series(const ProblemSpec& spec, int order) {
  const Rat r1 = spec.r_prime_at_zero();
  if (r1.is_zero()) throw Error(ErrorCode::InvalidProblem, "R'(0) = 0: the branch is not a power series in q");
  if (order < 1) throw Error(ErrorCode::Usage, "series order must be at least 1");
  SeriesQ s;
  s.order = order;
  for (int m = 1; m <= order; ++m) {
    // [q^m] R(x + c q^m) = [q^m] R(x) + R'(0) c, and it must equal [m == 1].
    const Rat have = compose_trunc(spec.r(), s.x, m).coeff(m);
    const Rat c = (Rat(m == 1 ? 1 : 0) - have) / r1;
    s.x = s.x + UPoly::monomial(Var::Q, c, m);
  }
  return s;
}

bool SeriesResidual::is_zero() const { return first_nonzero() < 0; }

int SeriesResidual::first_nonzero() const {
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) return static_cast<int>(i);
  return -1;
}

SeriesResidual series_ode_residual(const LinearODE& ode, const SeriesQ& s) {
  int max_deg = 0;
  for (const auto& b : ode.b) max_deg = std::max(max_deg, b.degree());
  SeriesResidual out;
  out.valid_order = s.order - max_deg - ode.order;
  if (out.valid_order < 0) return out;

  UPoly total = ode.inhomogeneous().with_var(Var::Q);
  UPoly deriv = s.x;
  for (int k = 0; k <= ode.order; ++k) {
    total = total + ode.coeff(k).with_var(Var::Q) * deriv;
    deriv = derivative(deriv);
  }
  for (int m = 0; m <= out.valid_order; ++m) out.coeffs.push_back(total.coeff(m));
  return out;
}

UPoly hypergeometric_series(const Hypergeometric& h, int order) {
  for (const auto& b : h.lower)
    if (b.is_integer() && b.sign() <= 0)
      throw Error(ErrorCode::ParameterPole, "lower parameter " + b.str() + " is a nonpositive integer");
  if (h.power < 1) throw Error(ErrorCode::Usage, "argument power must be at least 1");
  std::vector<Rat> cs(static_cast<std::size_t>(std::max(order, 0)) + 1, Rat(0));
  Rat term(1);
  for (int k = 0; k * h.power <= order; ++k) {
    cs[static_cast<std::size_t>(k * h.power)] = term;
    // t_{k+1} / t_k = prod (a_i + k) / prod (b_j + k) * scale / (k + 1)
    for (const auto& a : h.upper) term = term * (a + Rat(k));
    for (const auto& b : h.lower) term = term / (b + Rat(k));
    term = term * h.scale / Rat(k + 1);
    if (term.is_zero()) break;
  }
  return UPoly(Var::Q, std::move(cs));
}

namespace {

Rat quartic_argument(const Rat& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidProblem, "p must be nonzero");
  return Rat(-256) / (Rat(27) * pow(p, 4));
}

SeriesQ with_prefactor(const UPoly& f, const Rat& p, int order) {
  SeriesQ s;
  s.order = order;
  s.x = truncate(f * UPoly::monomial(Var::Q, Rat(1) / p, 1), order);
  return s;
}

}  // namespace

SeriesQ quartic_series_3f2(const Rat& p, int order) {
  const Hypergeometric h{{Rat(1, 4), Rat(1, 2), Rat(3, 4)}, {Rat(2, 3), Rat(4, 3)}, quartic_argument(p), 3};
  return with_prefactor(hypergeometric_series(h, order - 1), p, order);
}

SeriesQ quartic_series_2f1(const Rat& p, int order) {
  const Rat z = quartic_argument(p);
  const Hypergeometric h1{{Rat(-1, 24), Rat(5, 24)}, {Rat(2, 3)}, z, 3};
  const Hypergeometric h2{{Rat(7, 24), Rat(13, 24)}, {Rat(4, 3)}, z, 3};
  const UPoly prod = truncate(hypergeometric_series(h1, order - 1) * hypergeometric_series(h2, order - 1), order - 1);
  return with_prefactor(prod, p, order);
}

}  // namespace abelroot
