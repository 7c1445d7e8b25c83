#ifndef CHROMHESS_RATIONAL_HPP
#define CHROMHESS_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>

#include "chromhess/errors.hpp"

namespace chromhess {

/// Arbitrary-precision rational number, always in canonical form:
/// gcd(|num|, den) = 1 and den > 0.  Backed by GMP.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long v) : value_(v) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  explicit Rational(const mpz_class& v) : value_(v) {}
  explicit Rational(mpq_class v) : value_(std::move(v)) {
    value_.canonicalize();
  }

  // Parses "a/b" or "a" with optional sign, base 10.
  static Rational parse(const std::string& text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }

  Rational inverse() const;
  Rational pow(unsigned e) const;

  /// Human-readable form: "a" when the denominator is 1, else "a/b".
  std::string str() const;
  /// Wire form, always "a/b".
  std::string fraction_str() const;

  static Rational factorial(unsigned n);

private:
  mpq_class value_;
};

}  // namespace chromhess

#endif
