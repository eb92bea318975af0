#include "abelroot/derive/linear_ode.hpp"

#include <limits>

#include "abelroot/error.hpp"

namespace abelroot {

namespace {

using Row = std::vector<UPoly>;

void make_primitive(Row& row) {
  UPoly g(Var::Q);
  bool any = false;
  for (const auto& e : row) {
    if (e.is_zero()) continue;
    g = any ? gcd(g, e) : monic(e);
    any = true;
  }
  if (!any || g.degree() == 0) return;
  for (auto& e : row)
    if (!e.is_zero()) e = exact_div(e, g);
}

int total_degree(const std::vector<UPoly>& v) {
  int s = 0;
  for (const auto& e : v)
    if (!e.is_zero()) s += e.degree();
  return s;
}

UPoly lcm(const UPoly& a, const UPoly& b) { return exact_div(a * b, gcd(a, b)); }

}  // namespace

LinearODE normalize(LinearODE ode) {
  UPoly g(Var::Q);
  bool any = false;
  for (const auto& e : ode.b) {
    if (e.is_zero()) continue;
    g = any ? gcd(g, e) : monic(e);
    any = true;
  }
  if (!any) return ode;
  for (auto& e : ode.b)
    if (!e.is_zero()) e = exact_div(e, g);

  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& e : ode.b)
    for (const auto& c : e.coeffs()) {
      if (c.is_zero()) continue;
      mpz_class n = abs(c.numerator());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
      mpz_class d = c.denominator();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
  Rat scale(mpq_class(den_lcm, num_gcd));
  for (int k = ode.order; k >= 0; --k) {
    const UPoly& lead_term = ode.coeff(k);
    if (lead_term.is_zero()) continue;
    if (lead_term.lead().sign() < 0) scale = -scale;
    break;
  }
  for (auto& e : ode.b) e *= scale;
  return ode;
}

LinearODE linear_ode(const ProblemSpec& spec, const DerivativeTower& tower) {
  const int n = spec.degree();
  if (tower.height() < n - 1) throw Error(ErrorCode::InvalidProblem, "tower too short for the linear ODE");
  const int cols = n + 1;
  const UPoly one = UPoly::constant(Var::Q, Rat(1));

  // Everything over the common denominator D^(n-1).
  std::vector<UPoly> d_pow(static_cast<std::size_t>(n), one);
  for (int e = 1; e < n; ++e) d_pow[static_cast<std::size_t>(e)] = d_pow[static_cast<std::size_t>(e - 1)] * tower.d;

  std::vector<Row> m(static_cast<std::size_t>(n), Row(static_cast<std::size_t>(cols), UPoly(Var::Q)));
  for (int j = 0; j < n; ++j) {
    auto& row = m[static_cast<std::size_t>(j)];
    for (int k = 1; k <= n - 1; ++k)
      row[static_cast<std::size_t>(k)] =
          tower.numerators[static_cast<std::size_t>(k - 1)].coeff(j) * d_pow[static_cast<std::size_t>(n - 1 - k)];
    if (j == 1) row[0] = d_pow[static_cast<std::size_t>(n - 1)];
    if (j == 0) row[static_cast<std::size_t>(n)] = d_pow[static_cast<std::size_t>(n - 1)];
  }

  // Fraction-free Gauss-Jordan elimination over Q[q].
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  std::size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    std::size_t best = m.size();
    for (std::size_t i = r; i < m.size(); ++i) {
      const UPoly& e = m[i][static_cast<std::size_t>(c)];
      if (e.is_zero()) continue;
      if (best == m.size() || e.degree() < m[best][static_cast<std::size_t>(c)].degree()) best = i;
    }
    if (best == m.size()) continue;
    std::swap(m[r], m[best]);
    make_primitive(m[r]);
    const UPoly pivot = m[r][static_cast<std::size_t>(c)];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][static_cast<std::size_t>(c)].is_zero()) continue;
      const UPoly factor = m[i][static_cast<std::size_t>(c)];
      for (int cc = 0; cc < cols; ++cc)
        m[i][static_cast<std::size_t>(cc)] =
            pivot * m[i][static_cast<std::size_t>(cc)] - factor * m[r][static_cast<std::size_t>(cc)];
      make_primitive(m[i]);
    }
    pivot_col_of_row.push_back(c);
    is_pivot[static_cast<std::size_t>(c)] = true;
    ++r;
  }

  std::vector<std::vector<UPoly>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    UPoly l = one;
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
      l = lcm(l, m[i][static_cast<std::size_t>(pivot_col_of_row[i])]);
    std::vector<UPoly> v(static_cast<std::size_t>(cols), UPoly(Var::Q));
    v[static_cast<std::size_t>(f)] = l;
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) {
      const auto pc = static_cast<std::size_t>(pivot_col_of_row[i]);
      v[pc] = -exact_div(m[i][static_cast<std::size_t>(f)] * l, m[i][pc]);
    }
    basis.push_back(std::move(v));
  }
  if (basis.empty()) throw Error(ErrorCode::EmptyKernel, "linear system has a trivial kernel");

  LinearODE best;
  int best_degree = std::numeric_limits<int>::max();
  for (auto& v : basis) {
    LinearODE cand;
    cand.order = n - 1;
    cand.b = std::move(v);
    cand = normalize(std::move(cand));
    const int deg = total_degree(cand.b);
    if (deg < best_degree) {
      best_degree = deg;
      best = std::move(cand);
    }
  }
  best.kernel_dimension = static_cast<int>(basis.size());
  best.ambiguous_kernel = basis.size() > 1;
  return best;
}

LinearODE linear_ode(const ProblemSpec& spec) {
  return linear_ode(spec, derivative_tower(spec, spec.degree() - 1));
}

std::vector<RatFunc> tower_residual(const LinearODE& ode, const DerivativeTower& tower) {
  const int n = tower.n;
  std::vector<RatFunc> out;
  for (int j = 0; j < n; ++j) {
    RatFunc acc(Var::Q);
    for (int k = 1; k <= ode.order; ++k) acc += RatFunc(ode.coeff(k)) * tower.rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)];
    if (j == 1) acc += RatFunc(ode.coeff(0));
    if (j == 0) acc += RatFunc(ode.inhomogeneous());
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace abelroot
