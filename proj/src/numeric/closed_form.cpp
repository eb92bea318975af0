#include "abelroot/numeric/closed_form.hpp"

#include <algorithm>
#include <cmath>

#include "abelroot/error.hpp"

namespace abelroot {

const char* to_string(ClosedFormMethod m) {
  switch (m) {
    case ClosedFormMethod::Babylonian: return "babylonian";
    case ClosedFormMethod::Cardano: return "cardano";
    case ClosedFormMethod::VietaTrig: return "vieta_trig";
    case ClosedFormMethod::VietaHyp: return "vieta_hyp";
    case ClosedFormMethod::Ferrari: return "ferrari";
    case ClosedFormMethod::QuarticW: return "quartic_w";
  }
  return "unknown";
}

ClosedFormMethod closed_form_method(const std::string& name) {
  for (auto m : {ClosedFormMethod::Babylonian, ClosedFormMethod::Cardano, ClosedFormMethod::VietaTrig,
                 ClosedFormMethod::VietaHyp, ClosedFormMethod::Ferrari, ClosedFormMethod::QuarticW})
    if (name == to_string(m)) return m;
  throw Error(ErrorCode::Usage, "unknown closed-form method '" + name + "'");
}

namespace {

double sgn(double v) { return v < 0.0 ? -1.0 : 1.0; }

double bisect(auto&& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::OutOfDomain, what);
}

double babylonian(double p, double q) {
  const double disc = p * p + 4.0 * q;
  require(p != 0.0 && disc >= 0.0, "babylonian needs p != 0 and p^2 + 4q >= 0");
  // (-p + sgn(p) sqrt(p^2 + 4q)) / 2, rationalised
  return 2.0 * q / (p + sgn(p) * std::sqrt(disc));
}

double cardano(double p, double q) {
  const double disc = q * q / 4.0 + p * p * p / 27.0;
  require(p != 0.0 && disc >= 0.0, "cardano needs q^2/4 + p^3/27 >= 0");
  const double a = std::cbrt(q / 2.0 + sgn(q) * std::sqrt(disc));
  return a - p / (3.0 * a);
}

double vieta_trig(double p, double q) {
  require(p < 0.0 && std::abs(q) < std::sqrt(-4.0 * p * p * p / 27.0),
          "vieta_trig needs p < 0 and |q| < sqrt(-4p^3/27)");
  const double arg = 1.5 * std::sqrt(3.0) * q / (p * std::sqrt(-p));
  return 2.0 * std::sqrt(-p / 3.0) * std::sin(std::asin(arg) / 3.0);
}

double vieta_hyp(double p, double q) {
  require(p > 0.0, "vieta_hyp needs p > 0");
  const double arg = 1.5 * std::sqrt(3.0) * q / (p * std::sqrt(p));
  return 2.0 * std::sqrt(p / 3.0) * std::sinh(std::asinh(arg) / 3.0);
}

double quartic_w(double p, double q) {
  require(p != 0.0, "quartic_w needs p != 0");
  // y = w^2 is the only positive root of -p^2 y^3 + 4 q y^2 + 1.
  auto g = [&](double y) { return (-p * p * y + 4.0 * q) * y * y + 1.0; };
  double hi = 1.0;
  while (g(hi) > 0.0) hi *= 2.0;
  const double y = bisect(g, 0.0, hi);
  const double w = sgn(p) * std::sqrt(y);
  const double rad = 2.0 * p * w * w * w - 1.0;
  require(rad >= 0.0, "quartic_w: 2 p w^3 - 1 < 0");
  return (std::sqrt(rad) - 1.0) / (2.0 * w);
}

}  // namespace

double largest_real_root_cubic(double a, double b, double c) {
  auto f = [&](double v) { return ((v + a) * v + b) * v + c; };
  const double bound = 1.0 + std::max({std::abs(a), std::abs(b), std::abs(c)});
  // Critical points of f split the line into monotone pieces.
  const double disc = a * a - 3.0 * b;
  double lo = -bound;
  if (disc > 0.0) {
    const double r = std::sqrt(disc);
    const double m1 = (-a - r) / 3.0;
    const double m2 = (-a + r) / 3.0;
    if (f(m2) <= 0.0) {
      lo = m2;
    } else {
      return bisect(f, -bound, m1);
    }
  }
  return bisect(f, lo, bound);
}

double ferrari_root(double c, double d, double e) {
  require(d != 0.0, "ferrari excludes d = 0");
  const double v = largest_real_root_cubic(2.0 * c, c * c - 4.0 * e, -d * d);
  require(v > 0.0, "ferrari: resolvent has no positive root");
  const double u = sgn(d) * std::sqrt(v);
  const double rad = 2.0 * d / (u * u * u) - 2.0 * c / (u * u) - 1.0;
  require(rad >= 0.0, "ferrari: branch root is not real");
  return -0.5 * u * (1.0 - std::sqrt(rad));
}

std::array<std::complex<double>, 4> ferrari_roots(double c, double d, double e) {
  require(d != 0.0, "ferrari excludes d = 0");
  const double v = largest_real_root_cubic(2.0 * c, c * c - 4.0 * e, -d * d);
  const double u = sgn(d) * std::sqrt(v);
  const std::complex<double> r1 = std::sqrt(std::complex<double>(-2.0 * d / (u * u * u) - 2.0 * c / (u * u) - 1.0));
  const std::complex<double> r2 = std::sqrt(std::complex<double>(2.0 * d / (u * u * u) - 2.0 * c / (u * u) - 1.0));
  const double h = 0.5 * u;
  return {h * (1.0 + r1), h * (1.0 - r1), -h * (1.0 + r2), -h * (1.0 - r2)};
}

std::array<std::complex<double>, 4> biquadratic_roots(double c, double e) {
  const std::complex<double> s = std::sqrt(std::complex<double>(c * c - 4.0 * e));
  const std::complex<double> y1 = std::sqrt((-c + s) / 2.0);
  const std::complex<double> y2 = std::sqrt((-c - s) / 2.0);
  return {y1, -y1, y2, -y2};
}

ClosedFormRoot closed_form_root(ClosedFormMethod method, int n, double p, double q) {
  ClosedFormRoot r;
  r.method = method;
  auto need = [&](int degree) {
    if (n != degree)
      throw Error(ErrorCode::Usage,
                  std::string(to_string(method)) + " applies to degree " + std::to_string(degree));
  };
  switch (method) {
    case ClosedFormMethod::Babylonian:
      need(2);
      r.value = babylonian(p, q);
      r.validity = "p != 0, p^2 + 4q >= 0";
      break;
    case ClosedFormMethod::Cardano:
      need(3);
      r.value = cardano(p, q);
      r.validity = "q^2/4 + p^3/27 >= 0 (all q when p > 0)";
      break;
    case ClosedFormMethod::VietaTrig:
      need(3);
      r.value = vieta_trig(p, q);
      r.validity = "p < 0, |q| < sqrt(-4p^3/27)";
      break;
    case ClosedFormMethod::VietaHyp:
      need(3);
      r.value = vieta_hyp(p, q);
      r.validity = "p > 0";
      break;
    case ClosedFormMethod::Ferrari:
      need(4);
      r.value = ferrari_root(0.0, p, -q);
      r.validity = "d = p != 0, branch radicand >= 0";
      break;
    case ClosedFormMethod::QuarticW:
      need(4);
      r.value = quartic_w(p, q);
      r.validity = "p != 0, 2 p w^3 >= 1";
      break;
  }
  return r;
}

DepressedCubic depress_cubic(const Rat& b, const Rat& c, const Rat& d) {
  // x = y - b/3
  const Rat s = -b / Rat(3);
  DepressedCubic out;
  out.shift = s;
  out.p = c - b * b / Rat(3);
  out.q = d + (Rat(2) * b * b * b) / Rat(27) - b * c / Rat(3);
  return out;
}

DepressedQuartic depress_quartic(const Rat& a3, const Rat& a2, const Rat& a1, const Rat& a0) {
  // x = y + s with s = -a3/4; expand (y+s)^4 + a3 (y+s)^3 + a2 (y+s)^2 + a1 (y+s) + a0.
  const Rat s = -a3 / Rat(4);
  DepressedQuartic out;
  out.shift = s;
  out.c = Rat(6) * s * s + Rat(3) * a3 * s + a2;
  out.d = Rat(4) * s * s * s + Rat(3) * a3 * s * s + Rat(2) * a2 * s + a1;
  out.e = s * s * s * s + a3 * s * s * s + a2 * s * s + a1 * s + a0;
  return out;
}

}  // namespace abelroot
