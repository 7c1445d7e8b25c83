#ifndef CHROMHESS_QPOLY_HPP
#define CHROMHESS_QPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "chromhess/rational.hpp"

namespace chromhess {

/// Univariate polynomial in q over Rational, stored densely with the
/// coefficient of q^k at index k.  Invariant: the highest-index coefficient
/// is nonzero, or the vector is empty (the zero polynomial).
class QPoly {
public:
  QPoly() = default;
  QPoly(const Rational& c);  // NOLINT: constant polynomial
  QPoly(long c) : QPoly(Rational(c)) {}
  explicit QPoly(std::vector<Rational> coeffs);

  static QPoly q_power(int k);
  static QPoly one() { return QPoly(Rational(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int k) const;
  Rational leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  QPoly scaled(const Rational& c) const;

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }
  friend bool operator<(const QPoly& a, const QPoly& b);

  /// Quotient and remainder; throws DivisionByZero when b = 0.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static QPoly gcd(QPoly a, QPoly b);
  QPoly monic() const;

  Rational eval(const Rational& x) const;
  std::string str() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Element of the field of rational functions in q, restricted to rational
/// coefficients.  Canonical form: gcd(num, den) = 1, den monic; zero is
/// 0/1.  Equality is structural.
class QRational {
public:
  QRational() : num_(), den_(QPoly::one()) {}
  QRational(const Rational& c) : num_(c), den_(QPoly::one()) {}  // NOLINT
  QRational(long c) : num_(Rational(c)), den_(QPoly::one()) {}   // NOLINT
  QRational(QPoly p) : num_(std::move(p)), den_(QPoly::one()) {} // NOLINT
  QRational(QPoly num, QPoly den);

  static QRational q() { return QRational(QPoly::q_power(1)); }
  static QRational q_power(int k) { return QRational(QPoly::q_power(k)); }
  static QRational one() { return QRational(Rational(1)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == QPoly::one() && den_ == QPoly::one(); }
  bool is_polynomial() const { return den_ == QPoly::one(); }
  bool is_constant() const { return num_.is_constant() && is_polynomial(); }
  Rational constant_value() const;

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  QRational operator-() const;
  QRational& operator+=(const QRational& o);
  QRational& operator-=(const QRational& o);
  QRational& operator*=(const QRational& o);
  QRational& operator/=(const QRational& o);
  friend QRational operator+(QRational a, const QRational& b) { return a += b; }
  friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
  friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
  friend QRational operator/(QRational a, const QRational& b) { return a /= b; }

  friend bool operator==(const QRational& a, const QRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRational& a, const QRational& b) {
    return !(a == b);
  }
  friend bool operator<(const QRational& a, const QRational& b);

  QRational pow(unsigned e) const;
  std::string str() const;

private:
  void normalize();
  QPoly num_, den_;
};

}  // namespace chromhess

#endif
