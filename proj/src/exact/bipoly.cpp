#include "abelroot/exact/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "abelroot/error.hpp"

namespace abelroot {

namespace {

void require_same_var(const BiPoly& a, const BiPoly& b) {
  if (a.coeff_var() != b.coeff_var())
    throw Error(ErrorCode::VariableMismatch, "bivariate polynomials over different coefficient variables");
}

}  // namespace

BiPoly::BiPoly(Var coeff_var, std::vector<UPoly> coeffs) : coeff_var_(coeff_var), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.var() != coeff_var_) throw Error(ErrorCode::VariableMismatch, "coefficient in the wrong variable");
  trim();
}

BiPoly BiPoly::from_main(const UPoly& p, Var coeff_var) {
  std::vector<UPoly> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) cs.push_back(UPoly::constant(coeff_var, c));
  return BiPoly(coeff_var, std::move(cs));
}

BiPoly BiPoly::from_coeff(const UPoly& c) { return BiPoly(c.var(), std::vector<UPoly>{c}); }

BiPoly BiPoly::shifted(const UPoly& r) {
  return from_main(r, Var::Q) - from_coeff(UPoly::identity(Var::Q));
}

void BiPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly BiPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return UPoly(coeff_var_);
  return coeffs_[static_cast<std::size_t>(k)];
}

UPoly BiPoly::lead() const { return is_zero() ? UPoly(coeff_var_) : coeffs_.back(); }

int BiPoly::coeff_degree() const {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  require_same_var(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), UPoly(coeff_var_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  require_same_var(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), UPoly(coeff_var_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  require_same_var(*this, o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<UPoly> out(coeffs_.size() + o.coeffs_.size() - 1, UPoly(coeff_var_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const UPoly& c) {
  if (c.var() != coeff_var_) throw Error(ErrorCode::VariableMismatch, "scaling by a polynomial in the wrong variable");
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

UPoly BiPoly::at(const Rat& t, Var main_var) const {
  std::vector<Rat> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(c.eval(t));
  return UPoly(main_var, std::move(cs));
}

double BiPoly::eval(double main, double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * main + it->eval(t);
  return acc;
}

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const UPoly& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ')';
    if (k > 0) os << "*X" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return os.str();
}

std::pair<BiPoly, BiPoly> divrem_main(const BiPoly& a, const BiPoly& b) {
  require_same_var(a, b);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  const UPoly lc = b.lead();
  if (lc.degree() != 0)
    throw Error(ErrorCode::NonMonicDivisor, "divisor leading coefficient " + lc.str() + " is not a nonzero constant");
  const Rat inv = Rat(1) / lc.coeff(0);
  const Var v = a.coeff_var();
  std::vector<UPoly> rem = a.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  if (dq < 0) return {BiPoly(v), a};
  std::vector<UPoly> quot(static_cast<std::size_t>(dq) + 1, UPoly(v));
  for (int k = dq; k >= 0; --k) {
    UPoly c = rem[static_cast<std::size_t>(k + db)] * inv;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(k)] = std::move(c);
  }
  rem.resize(static_cast<std::size_t>(db), UPoly(v));
  return {BiPoly(v, std::move(quot)), BiPoly(v, std::move(rem))};
}

BiPoly derivative_main(const BiPoly& a) {
  if (a.degree() < 1) return BiPoly(a.coeff_var());
  std::vector<UPoly> out;
  out.reserve(static_cast<std::size_t>(a.degree()));
  for (int k = 1; k <= a.degree(); ++k) out.push_back(a.coeff(k) * Rat(k));
  return BiPoly(a.coeff_var(), std::move(out));
}

BiPoly derivative_coeff(const BiPoly& a) {
  std::vector<UPoly> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(derivative(c));
  return BiPoly(a.coeff_var(), std::move(out));
}

}  // namespace abelroot
