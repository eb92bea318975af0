#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace abelroot {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : v_(value) {}   // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpz_class& integer) : v_(integer) {}
  explicit Rat(mpq_class value);

  /// Parses "a", "-a" or "a/b" (integers of any size).
  static Rat parse(std::string_view text);
  /// Exact binary value of a finite double.
  static Rat from_double(double value);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  /// Lossless text form: "-3", "27/4".
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_{0};
};

Rat abs(const Rat& r);
Rat pow(const Rat& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace abelroot
