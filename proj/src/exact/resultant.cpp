#include "abelroot/exact/resultant.hpp"

#include "abelroot/error.hpp"

namespace abelroot {

std::vector<std::vector<UPoly>> sylvester_matrix(const BiPoly& a, const BiPoly& b) {
  const int m = a.degree();
  const int n = b.degree();
  const int size = m + n;
  const Var v = a.coeff_var();
  std::vector<std::vector<UPoly>> mat(static_cast<std::size_t>(size),
                                      std::vector<UPoly>(static_cast<std::size_t>(size), UPoly(v)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = a.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k)
      mat[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] = b.coeff(n - k);
  return mat;
}

UPoly bareiss_determinant(std::vector<std::vector<UPoly>> m, Var v) {
  const std::size_t size = m.size();
  if (size == 0) return UPoly::constant(v, Rat(1));
  UPoly prev = UPoly::constant(v, Rat(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < size && m[pivot][k].is_zero()) ++pivot;
      if (pivot == size) return UPoly(v);
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j)
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = UPoly(v);
    }
    prev = m[k][k];
  }
  UPoly det = m[size - 1][size - 1];
  return negate ? -det : det;
}

UPoly resultant(const BiPoly& a, const BiPoly& b) {
  if (a.coeff_var() != b.coeff_var())
    throw Error(ErrorCode::VariableMismatch, "resultant of polynomials over different coefficient rings");
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant with a zero polynomial");
  const Var v = a.coeff_var();
  if (a.degree() == 0) return pow(a.coeff(0), static_cast<unsigned>(b.degree()));
  if (b.degree() == 0) return pow(b.coeff(0), static_cast<unsigned>(a.degree()));
  return bareiss_determinant(sylvester_matrix(a, b), v);
}

Rat resultant(const UPoly& a, const UPoly& b) {
  if (a.var() != b.var()) throw Error(ErrorCode::VariableMismatch, "resultant of polynomials in different variables");
  const UPoly r = resultant(BiPoly::from_main(a, Var::Q), BiPoly::from_main(b, Var::Q));
  return r.coeff(0);
}

UPoly discriminant(const BiPoly& p) {
  const int n = p.degree();
  if (n < 2) throw Error(ErrorCode::InvalidProblem, "discriminant needs degree >= 2");
  const UPoly lc = p.lead();
  if (lc.degree() != 0)
    throw Error(ErrorCode::DegenerateLeading, "leading coefficient " + lc.str() + " is not a nonzero constant");
  UPoly res = resultant(p, derivative_main(p));
  Rat scale = Rat(1) / lc.coeff(0);
  if ((n * (n - 1) / 2) % 2 == 1) scale = -scale;
  return res * scale;
}

Rat discriminant(const UPoly& p) { return discriminant(BiPoly::from_main(p, Var::Q)).coeff(0); }

}  // namespace abelroot
