#pragma once

#include <vector>

#include "abelroot/exact/bipoly.hpp"

namespace abelroot {

/// Sylvester resultant in the main variable, computed by fraction-free
/// Bareiss elimination over Q[coeff_var]. Convention:
/// Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a.
UPoly resultant(const BiPoly& a, const BiPoly& b);
Rat resultant(const UPoly& a, const UPoly& b);

/// Sylvester matrix, rows of a first. Exposed for tests.
std::vector<std::vector<UPoly>> sylvester_matrix(const BiPoly& a, const BiPoly& b);

/// Determinant over Q[v] by Bareiss elimination with row pivoting.
UPoly bareiss_determinant(std::vector<std::vector<UPoly>> m, Var v);

/// D = (-1)^(n(n-1)/2) Res(P, dP/dx) / lc(P). The leading coefficient of P
/// must be a nonzero constant.
UPoly discriminant(const BiPoly& p);
Rat discriminant(const UPoly& p);

}  // namespace abelroot
