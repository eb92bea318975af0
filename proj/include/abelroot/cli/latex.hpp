#pragma once

#include <string>

#include "abelroot/derive/abel.hpp"
#include "abelroot/derive/linear_ode.hpp"

namespace abelroot {

/// Descending powers, e.g. "27q^{2}+4"; "0" for the zero polynomial.
std::string latex_poly(const UPoly& p);

/// "(27q^{2}+4)x''+27qx'-3x=0": highest derivative first, the
/// inhomogeneous term last and omitted when zero.
std::string render_latex(const LinearODE& ode);

/// "x'=\frac{2}{4q+1}x+\frac{1}{4q+1}": descending powers of x, each
/// coefficient written as a quotient of integer polynomials.
std::string render_latex(const AbelODE& ode);

}  // namespace abelroot
