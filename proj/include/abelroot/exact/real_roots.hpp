#pragma once

#include <vector>

#include "abelroot/exact/upoly.hpp"

namespace abelroot {

/// Half-open isolating interval (lo, hi] containing exactly one real root.
struct RootInterval {
  Rat lo;
  Rat hi;
  double midpoint() const { return ((lo + hi) * Rat(1, 2)).to_double(); }
};

/// Sturm chain of the squarefree part of p.
std::vector<UPoly> sturm_chain(const UPoly& p);

/// Number of distinct real roots of p in (lo, hi].
int count_real_roots(const std::vector<UPoly>& chain, const Rat& lo, const Rat& hi);

/// Isolates the distinct real roots of p in (lo, hi], each refined to an
/// interval no wider than `width`, in increasing order.
std::vector<RootInterval> isolate_real_roots(const UPoly& p, const Rat& lo, const Rat& hi, const Rat& width);

/// Cauchy bound: every complex root has modulus below it.
Rat root_bound(const UPoly& p);

}  // namespace abelroot
