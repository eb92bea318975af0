#include "abelroot/numeric/track.hpp"

#include <algorithm>
#include <cmath>

#include "abelroot/error.hpp"
#include "abelroot/exact/real_roots.hpp"

namespace abelroot {

DPoly DPoly::from(const UPoly& p) {
  DPoly d;
  d.c.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) d.c.push_back(c.to_double());
  return d;
}

double DPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double DPoly::derivative_at(double x) const {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * c[k];
  return acc;
}

double DPoly::scale_at(double x) const {
  double acc = 0.0;
  const double ax = std::abs(x);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

PolishResult newton_polish(const DPoly& p, double x0) {
  PolishResult r;
  r.x = x0;
  for (; r.iterations < 50; ++r.iterations) {
    const double v = p.eval(r.x);
    if (std::abs(v) <= 1e-13 * std::max(1.0, p.scale_at(r.x))) {
      r.converged = true;
      return r;
    }
    const double dv = p.derivative_at(r.x);
    if (std::abs(dv) <= 1e-14 * std::max(1.0, p.scale_at(r.x))) {
      r.derivative_too_small = true;
      return r;
    }
    const double next = r.x - v / dv;
    if (next == r.x) break;
    r.x = next;
  }
  r.converged = std::abs(p.eval(r.x)) <= 1e-13 * std::max(1.0, p.scale_at(r.x));
  return r;
}

const char* to_string(TrackStatus s) {
  switch (s) {
    case TrackStatus::Ok: return "ok";
    case TrackStatus::HitBranchPoint: return "hit_branch_point";
    case TrackStatus::StepUnderflow: return "step_underflow";
  }
  return "unknown";
}

std::optional<double> first_branch_point(const UPoly& d, double q_target) {
  if (q_target == 0.0 || d.degree() < 1) return std::nullopt;
  const bool negative = q_target < 0.0;
  // Look on the positive side only: D(-q) covers negative targets.
  const UPoly dd = negative ? compose(d, UPoly(Var::Q, {Rat(0), Rat(-1)})) : d;
  const Rat hi = Rat::from_double(std::abs(q_target));
  const Rat width = hi * Rat(1, 1L << 52) * Rat(1, 16);
  const auto roots = isolate_real_roots(dd, Rat(0), hi, width);
  if (roots.empty()) return std::nullopt;
  const double q = roots.front().midpoint();
  return negative ? -q : q;
}

namespace {

struct Rhs {
  std::vector<DPoly> w;  // w[j] = coefficient of x^j in W, as a polynomial in q
  DPoly d;
  DPoly r_prime;

  double operator()(double q, double x) const {
    const double dq = d.eval(q);
    if (dq == 0.0) return 1.0 / r_prime.eval(x);
    double acc = 0.0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = acc * x + it->eval(q);
    return acc / dq;
  }
};

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

TrackResult track_root(const ProblemSpec& spec, const AbelODE& abel, double q_target, const TrackOptions& opts) {
  if (spec.r_prime_at_zero().is_zero())
    throw Error(ErrorCode::InvalidProblem, "R'(0) = 0: no unique branch through the origin");
  if (!std::isfinite(q_target)) throw Error(ErrorCode::Usage, "q must be finite");

  Rhs f;
  for (int j = 0; j <= abel.w.degree(); ++j) f.w.push_back(DPoly::from(abel.w.coeff(j)));
  f.d = DPoly::from(abel.d);
  f.r_prime = DPoly::from(spec.r_prime());
  DPoly p = DPoly::from(spec.r());
  p.c[0] = 0.0;

  TrackResult res;
  res.q_target = q_target;
  double q_end = q_target;
  if (auto qs = first_branch_point(abel.d, q_target)) {
    res.status = TrackStatus::HitBranchPoint;
    res.q_star = *qs;
    q_end = *qs * (1.0 - 1e-9);
  }

  double q = 0.0;
  double x = 0.0;
  const double span = std::abs(q_end);
  const double dir = q_end < 0.0 ? -1.0 : 1.0;
  double h = std::min(span, 1e-3 * std::max(span, 1e-3));
  const double h_min = 1e-14 * std::abs(q_target);

  auto polish_at = [&](double qq, double xx) {
    p.c[0] = -qq;
    const auto pr = newton_polish(p, xx);
    res.polish_iters += pr.iterations;
    return pr.derivative_too_small ? xx : pr.x;
  };

  double k1 = f(q, x);
  while (dir * (q_end - q) > 0.0) {
    if (res.steps + res.rejected >= opts.max_steps) {
      res.status = TrackStatus::StepUnderflow;
      break;
    }
    const double remaining = dir * (q_end - q);
    bool last = false;
    if (h >= remaining) {
      h = remaining;
      last = true;
    }
    const double hs = dir * h;
    const double k2 = f(q + c2 * hs, x + hs * a21 * k1);
    const double k3 = f(q + c3 * hs, x + hs * (a31 * k1 + a32 * k2));
    const double k4 = f(q + c4 * hs, x + hs * (a41 * k1 + a42 * k2 + a43 * k3));
    const double k5 = f(q + c5 * hs, x + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const double k6 = f(q + hs, x + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const double x5 = x + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const double k7 = f(q + hs, x5);
    const double err = std::abs(hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
    const double sc = opts.abs_tol + opts.rel_tol * std::max(std::abs(x), std::abs(x5));
    const double ratio = err / sc;

    if (!std::isfinite(ratio) || ratio > 1.0) {
      ++res.rejected;
      const double factor = std::isfinite(ratio) ? std::max(0.2, 0.9 * std::pow(ratio, -0.2)) : 0.2;
      h *= factor;
      if (h < h_min) {
        res.status = TrackStatus::StepUnderflow;
        break;
      }
      continue;
    }

    ++res.steps;
    q = last ? q_end : q + hs;
    x = polish_at(q, x5);
    k1 = f(q, x);
    const double factor = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
    h *= factor;
    if (last) break;
  }

  res.q_reached = q;
  res.x = polish_at(q, x);
  p.c[0] = -q;
  res.residual = std::abs(p.eval(res.x));
  if (res.status == TrackStatus::Ok && res.residual > opts.residual_tol) res.status = TrackStatus::StepUnderflow;
  return res;
}

TrackResult track_root(const ProblemSpec& spec, double q_target, const TrackOptions& opts) {
  return track_root(spec, abel_ode(spec), q_target, opts);
}

}  // namespace abelroot
