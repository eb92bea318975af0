#include "abelroot/derive/trinomial.hpp"

#include <sstream>

#include "abelroot/error.hpp"

namespace abelroot {

namespace {

// c_{n,k} for k = 0..n-2: the coefficient of q^k x^(k).
std::vector<long> lower_coefficients(int n) {
  switch (n) {
    case 3: return {-3, 27};
    case 4: return {-40, 688, 1152};
    case 5: return {-1155, 31875, 73125, 31250};
    case 6: return {-57456, 2307456, 6658200, 4153680, 816480};
    default: throw Error(ErrorCode::InvalidProblem, "reference table covers n = 3..6 only");
  }
}

std::string describe(const LinearODE& ode) {
  std::ostringstream os;
  for (int k = ode.order; k >= 0; --k) os << "  b" << k << " = " << ode.coeff(k).str() << '\n';
  os << "  inhomogeneous = " << ode.inhomogeneous().str() << '\n';
  return os.str();
}

}  // namespace

LinearODE reference_trinomial_ode(int n, const Rat& p) {
  const auto lower = lower_coefficients(n);
  LinearODE ode;
  ode.order = n - 1;
  ode.b.assign(static_cast<std::size_t>(n) + 1, UPoly(Var::Q));
  const Rat lead_p = pow(Rat(n - 1), static_cast<unsigned>(n - 1)) * pow(p, static_cast<unsigned>(n));
  const Rat lead_q = pow(Rat(n), static_cast<unsigned>(n));
  ode.b[static_cast<std::size_t>(n - 1)] =
      UPoly::constant(Var::Q, lead_p) + UPoly::monomial(Var::Q, lead_q, n - 1);
  for (int k = 0; k <= n - 2; ++k)
    ode.b[static_cast<std::size_t>(k)] = UPoly::monomial(Var::Q, Rat(lower[static_cast<std::size_t>(k)]), k);
  return normalize(std::move(ode));
}

LinearODE reference_cubic_ode(const Rat& s, const Rat& p) {
  LinearODE ode;
  ode.order = 2;
  const Rat s2 = s * s;
  const Rat s3 = s2 * s;
  ode.b = {UPoly::constant(Var::Q, Rat(-3)),
           UPoly(Var::Q, {Rat(9) * p * s - Rat(2) * s3, Rat(27)}),
           UPoly(Var::Q, {Rat(4) * p * p * p - p * p * s2, Rat(18) * p * s - Rat(4) * s3, Rat(27)}),
           UPoly::constant(Var::Q, -s)};
  return normalize(std::move(ode));
}

TrinomialCheck verify_trinomial_table(int n, const Rat& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidProblem, "trinomial table needs p != 0");
  TrinomialCheck check;
  check.n = n;
  check.p = p;
  check.expected = reference_trinomial_ode(n, p);
  check.derived = linear_ode(trinomial(n, p));
  check.match = check.derived == check.expected;
  if (!check.match) {
    std::ostringstream os;
    os << "mismatch for n = " << n << ", p = " << p.str() << "\nderived:\n"
       << describe(check.derived) << "expected:\n" << describe(check.expected);
    check.report = os.str();
  }
  return check;
}

}  // namespace abelroot
