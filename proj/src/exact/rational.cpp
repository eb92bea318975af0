#include "abelroot/exact/rational.hpp"

#include <cmath>
#include <ostream>

#include "abelroot/error.hpp"

namespace abelroot {

Rat::Rat(long num, long den) : v_(num, den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  v_.canonicalize();
}

Rat::Rat(mpq_class value) : v_(std::move(value)) {
  if (v_.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::Syntax, "empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error(ErrorCode::Syntax, "malformed rational '" + s + "'");
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  return Rat(mpq_class(n, d));
}

Rat Rat::from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::OutOfDomain, "non-finite value");
  return Rat(mpq_class(value));
}

std::string Rat::str() const { return v_.get_str(); }

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  Rat b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace abelroot
