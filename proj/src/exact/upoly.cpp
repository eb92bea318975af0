#include "abelroot/exact/upoly.hpp"

#include <ostream>
#include <sstream>

#include "abelroot/error.hpp"

namespace abelroot {

char var_name(Var v) { return v == Var::X ? 'x' : 'q'; }

namespace {

void require_same_var(const UPoly& a, const UPoly& b) {
  if (a.var() != b.var())
    throw Error(ErrorCode::VariableMismatch,
                std::string("polynomials in ") + var_name(a.var()) + " and " + var_name(b.var()));
}

}  // namespace

UPoly::UPoly(Var v, std::vector<Rat> coeffs) : var_(v), coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(Var v, const Rat& c) { return UPoly(v, std::vector<Rat>{c}); }

UPoly UPoly::monomial(Var v, const Rat& c, int power) {
  std::vector<Rat> cs(static_cast<std::size_t>(power) + 1);
  cs.back() = c;
  return UPoly(v, std::move(cs));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rat UPoly::lead() const { return is_zero() ? Rat(0) : coeffs_.back(); }

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  require_same_var(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  require_same_var(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  require_same_var(*this, o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Rat UPoly::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UPoly::eval(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->to_double();
  return acc;
}

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rat mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rat(1);
    if (k == 0 || !unit) os << mag.str();
    if (k > 0) {
      if (!unit) os << '*';
      os << var_name(var_);
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
  require_same_var(a, b);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  if (dq < 0) return {UPoly(a.var()), a};
  std::vector<Rat> quot(static_cast<std::size_t>(dq) + 1);
  const Rat inv_lead = Rat(1) / b.lead();
  const auto& bc = b.coeffs();
  for (int k = dq; k >= 0; --k) {
    const Rat c = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly(a.var(), std::move(quot)), UPoly(a.var(), std::move(rem))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [quot, rem] = divrem(a, b);
  if (!rem.is_zero())
    throw Error(ErrorCode::NonExactDivision, "(" + a.str() + ") is not divisible by (" + b.str() + ")");
  return quot;
}

UPoly monic(const UPoly& a) {
  if (a.is_zero()) return a;
  return a * (Rat(1) / a.lead());
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  require_same_var(a, b);
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "gcd(0, 0) is undefined");
  UPoly u = monic(a), v = monic(b);
  while (!v.is_zero()) {
    UPoly r = divrem(u, v).second;
    u = std::move(v);
    v = monic(r);
  }
  return monic(u);
}

UPoly derivative(const UPoly& a) {
  if (a.degree() < 1) return UPoly(a.var());
  std::vector<Rat> out(static_cast<std::size_t>(a.degree()));
  for (int k = 1; k <= a.degree(); ++k) out[static_cast<std::size_t>(k - 1)] = a.coeff(k) * Rat(k);
  return UPoly(a.var(), std::move(out));
}

UPoly pow(const UPoly& a, unsigned exponent) {
  UPoly result = UPoly::constant(a.var(), Rat(1));
  UPoly base = a;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

UPoly compose(const UPoly& f, const UPoly& r) {
  UPoly acc(r.var());
  const auto& fc = f.coeffs();
  for (auto it = fc.rbegin(); it != fc.rend(); ++it) {
    acc *= r;
    acc += UPoly::constant(r.var(), *it);
  }
  return acc;
}

UPoly compose_q(const UPoly& f, const UPoly& r) {
  if (f.var() != Var::Q || r.var() != Var::X)
    throw Error(ErrorCode::VariableMismatch, "compose_q expects f(q) and r(x)");
  return compose(f, r);
}

Rat integer_content(const UPoly& a) {
  if (a.is_zero()) return Rat(1);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& c : a.coeffs()) {
    if (c.is_zero()) continue;
    mpz_class n = abs(c.numerator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_class d = c.denominator();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  Rat c(mpq_class(num_gcd, den_lcm));
  return a.lead().sign() < 0 ? -c : c;
}

SquareSplit square_split(const UPoly& a) {
  if (a.degree() < 1) return {UPoly::constant(a.var(), Rat(1)), a};
  const Rat c = a.lead();
  // Yun's algorithm on the monic part: m = prod f_i^i.
  UPoly m = monic(a);
  UPoly square = UPoly::constant(a.var(), Rat(1));
  UPoly rest = UPoly::constant(a.var(), c);
  UPoly g = gcd(m, derivative(m));
  UPoly w = exact_div(m, g);
  int multiplicity = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, g);
    UPoly factor = exact_div(w, y);
    if (factor.degree() > 0) {
      square *= pow(factor, static_cast<unsigned>(multiplicity / 2));
      if (multiplicity % 2) rest *= factor;
    }
    g = exact_div(g, y);
    w = std::move(y);
    ++multiplicity;
  }
  return {square, rest};
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.str(); }

}  // namespace abelroot
