#include "abelroot/exact/real_roots.hpp"

#include "abelroot/error.hpp"

namespace abelroot {

std::vector<UPoly> sturm_chain(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm chain of the zero polynomial");
  std::vector<UPoly> chain;
  if (p.degree() == 0) {
    chain.push_back(p);
    return chain;
  }
  const UPoly squarefree = exact_div(p, gcd(p, derivative(p)));
  chain.push_back(squarefree);
  chain.push_back(derivative(squarefree));
  while (chain.back().degree() > 0) {
    UPoly r = -divrem(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

namespace {

int sign_changes(const std::vector<UPoly>& chain, const Rat& t) {
  int changes = 0;
  int last = 0;
  for (const auto& s : chain) {
    const int sg = s.eval(t).sign();
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

void isolate(const std::vector<UPoly>& chain, const Rat& lo, const Rat& hi, int count, const Rat& width,
             std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1 && hi - lo <= width) {
    out.push_back({lo, hi});
    return;
  }
  const Rat mid = (lo + hi) * Rat(1, 2);
  const int left = count_real_roots(chain, lo, mid);
  isolate(chain, lo, mid, left, width, out);
  isolate(chain, mid, hi, count - left, width, out);
}

}  // namespace

int count_real_roots(const std::vector<UPoly>& chain, const Rat& lo, const Rat& hi) {
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

std::vector<RootInterval> isolate_real_roots(const UPoly& p, const Rat& lo, const Rat& hi, const Rat& width) {
  std::vector<RootInterval> out;
  if (p.degree() < 1 || !(lo < hi)) return out;
  const auto chain = sturm_chain(p);
  isolate(chain, lo, hi, count_real_roots(chain, lo, hi), width, out);
  return out;
}

Rat root_bound(const UPoly& p) {
  if (p.degree() < 1) return Rat(1);
  Rat m(0);
  const Rat lead = abs(p.lead());
  for (int k = 0; k < p.degree(); ++k) {
    const Rat r = abs(p.coeff(k)) / lead;
    if (r > m) m = r;
  }
  return Rat(1) + m;
}

}  // namespace abelroot
