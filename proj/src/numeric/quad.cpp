#include "abelroot/numeric/quad.hpp"

#include <cmath>
#include <queue>

#include "abelroot/error.hpp"
#include "abelroot/exact/real_roots.hpp"

namespace abelroot {

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  double a;
  double b;
  double value;
  double error;
  int depth;
  bool operator<(const Piece& o) const { return error < o.error; }
};

Piece gk15(const std::function<double(double)>& f, double a, double b, int depth) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    kronrod += kWgk[j] * s;
    if (j % 2 == 1) gauss += kWg[j / 2] * s;
  }
  return {a, b, kronrod * h, std::abs((kronrod - gauss) * h), depth};
}

// Distinct real zeros of p strictly between lo and hi.
int zeros_inside(const UPoly& p, const Rat& lo, const Rat& hi) {
  if (p.degree() < 1) return 0;
  const auto chain = sturm_chain(p);
  int count = count_real_roots(chain, lo, hi);
  if (p.eval(hi).is_zero()) --count;
  return count;
}

}  // namespace

QuadResult quad(const std::function<double(double)>& f, double a, double b, double tol) {
  QuadResult out;
  if (a == b) return out;
  if (b < a) {
    out = quad(f, b, a, tol);
    out.value = -out.value;
    return out;
  }
  std::priority_queue<Piece> heap;
  heap.push(gk15(f, a, b, 0));
  double value = heap.top().value;
  double error = heap.top().error;
  while (error > tol * (1.0 + std::abs(value))) {
    if (!std::isfinite(value) || !std::isfinite(error))
      throw Error(ErrorCode::SingularIntegrand, "integrand is not finite on the interval");
    const Piece worst = heap.top();
    if (worst.depth >= 40)
      throw Error(ErrorCode::NonConvergence, "quadrature did not converge within refinement depth 40");
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Piece left = gk15(f, worst.a, mid, worst.depth + 1);
    const Piece right = gk15(f, mid, worst.b, worst.depth + 1);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running totals.
  out.value = 0.0;
  out.error = 0.0;
  out.intervals = static_cast<int>(heap.size());
  while (!heap.empty()) {
    out.value += heap.top().value;
    out.error += heap.top().error;
    heap.pop();
  }
  return out;
}

QuadResult quad(const IntegrandSide& side, double a, double b, double tol, int interval_sign) {
  if (a == b) return {};
  if (side.sign_rule == SignRule::DerivativeOnInterval && interval_sign == 0)
    throw Error(ErrorCode::Usage, "integrand sign depends on the interval; pass the sign of R'");
  const Rat lo = Rat::from_double(std::min(a, b));
  const Rat hi = Rat::from_double(std::max(a, b));
  const UPoly reduced_den = exact_div(side.rational_den, gcd(side.numerator, side.rational_den));
  if (zeros_inside(reduced_den, lo, hi) > 0 || (side.radical && zeros_inside(side.radicand, lo, hi) > 0))
    throw Error(ErrorCode::SingularIntegrand, "integrand is singular inside [" + lo.str() + ", " + hi.str() + "]");
  if (side.radical && side.radicand.eval((lo + hi) * Rat(1, 2)).sign() < 0)
    throw Error(ErrorCode::OutOfDomain, "radicand is negative on the interval");
  return quad([&](double s) { return side.eval(s, interval_sign); }, a, b, tol);
}

namespace {

int derivative_sign_on(const ProblemSpec& spec, double x) {
  const double v = spec.r_prime().eval(0.5 * x);
  return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
}

}  // namespace

IdentityCheck check_identity(const ProblemSpec& spec, const IntegrandSpec& in, double q, double x, double tol) {
  IdentityCheck c;
  const int sign = in.lhs.sign_rule == SignRule::DerivativeOnInterval ? derivative_sign_on(spec, x) : 0;
  c.lhs = quad(in.lhs, 0.0, x, tol, sign).value;
  c.rhs = quad(in.rhs, 0.0, q, tol).value;
  c.diff = std::abs(c.lhs - c.rhs);
  return c;
}

IdentityCheck check_betti_identity(double q, double x, double tol) {
  IdentityCheck c;
  c.lhs = quad([](double u) { return u / std::sqrt(u * (((u + 4.0) * u - 8.0) * u + 12.0)); }, 0.0, x * x, tol)
              .value;
  c.rhs = quad([](double t) { return 2.0 / (5.0 * std::sqrt(t * t + 108.0)); }, 0.0, q, tol).value;
  c.diff = std::abs(c.lhs - c.rhs);
  return c;
}

double invert_phi(const IntegrandSide& side, double target, double lo, double hi, int interval_sign) {
  auto g = [&](double x) { return quad(side, 0.0, x, 1e-14, interval_sign).value - target; };
  double glo = g(lo);
  const double ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if ((glo < 0.0) == (ghi < 0.0))
    throw Error(ErrorCode::BadBracket, "phi - target does not change sign on the bracket");
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 200; ++i) {
    const double gx = g(x);
    if (std::abs(gx) <= 1e-13 || hi - lo <= 1e-15 * std::max(1.0, std::abs(x))) return x;
    if ((gx < 0.0) == (glo < 0.0)) {
      lo = x;
      glo = gx;
    } else {
      hi = x;
    }
    const double slope = side.eval(x, interval_sign);
    double next = x - gx / slope;
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    x = next;
  }
  if (std::abs(g(x)) > 1e-10) throw Error(ErrorCode::NonConvergence, "phi inversion did not converge");
  return x;
}

}  // namespace abelroot
