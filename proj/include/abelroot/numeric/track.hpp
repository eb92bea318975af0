#pragma once

#include <optional>
#include <vector>

#include "abelroot/derive/abel.hpp"

namespace abelroot {

/// Polynomial with double coefficients, ascending powers.
struct DPoly {
  std::vector<double> c;

  static DPoly from(const UPoly& p);
  double eval(double x) const;
  double derivative_at(double x) const;
  /// sum |c_k| |x|^k, the natural size of eval(x) for cancellation.
  double scale_at(double x) const;
};

struct PolishResult {
  double x = 0.0;
  int iterations = 0;
  bool converged = false;
  bool derivative_too_small = false;
};

/// Newton on p(x) = 0 from x0 until |p(x)| <= 1e-13 * scale, at most 50 iterations.
PolishResult newton_polish(const DPoly& p, double x0);

enum class TrackStatus { Ok, HitBranchPoint, StepUnderflow };

const char* to_string(TrackStatus s);

struct TrackOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  double residual_tol = 1e-10;
  int max_steps = 100000;
};

struct TrackResult {
  double q_target = 0.0;
  double q_reached = 0.0;
  double x = 0.0;
  double residual = 0.0;  // |P(x, q_reached)|
  int steps = 0;
  int rejected = 0;
  int polish_iters = 0;
  TrackStatus status = TrackStatus::Ok;
  std::optional<double> q_star;  // set with HitBranchPoint
};

/// Real zero of D in (0, q] (or [q, 0)) closest to 0, refined to about 1e-16 relative.
std::optional<double> first_branch_point(const UPoly& d, double q_target);

/// Integrates x' = W(x, q) / D(q) from x(0) = 0 to q_target with Dormand-Prince 5(4),
/// polishing on R(x) - q after every accepted step. Stops short of the first real
/// zero of D on the way and reports it. Throws InvalidProblem when R'(0) = 0.
TrackResult track_root(const ProblemSpec& spec, const AbelODE& abel, double q_target, const TrackOptions& opts = {});
TrackResult track_root(const ProblemSpec& spec, double q_target, const TrackOptions& opts = {});

}  // namespace abelroot
