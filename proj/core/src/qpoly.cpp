#include "chromhess/qpoly.hpp"

#include <sstream>

namespace chromhess {

QPoly::QPoly(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPoly QPoly::q_power(int k) {
  QPoly p;
  p.coeffs_.assign(static_cast<size_t>(k) + 1, Rational(0));
  p.coeffs_.back() = Rational(1);
  return p;
}

Rational QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(k)];
}

Rational QPoly::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                            Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPoly(std::move(out));
}

QPoly QPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return QPoly();
  QPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

bool operator<(const QPoly& a, const QPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) {
    return a.coeffs_.size() < b.coeffs_.size();
  }
  for (size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  }
  return false;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  QPoly rem = a;
  QPoly quo;
  const int db = b.degree();
  const Rational lb = b.leading();
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    const Rational factor = rem.leading() / lb;
    // rem -= factor * q^shift * b
    for (int k = 0; k <= db; ++k) {
      rem.coeffs_[static_cast<size_t>(k + shift)] -= factor * b.coeff(k);
    }
    rem.trim();
    QPoly term = QPoly::q_power(shift).scaled(factor);
    quo += term;
  }
  return {quo, rem};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i];
  }
  return acc;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = mag.is_one();
    if (k == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

QRational::QRational(QPoly num, QPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void QRational::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly::one();
    return;
  }
  QPoly g = QPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = QPoly::divmod(num_, g).first;
    den_ = QPoly::divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Rational QRational::constant_value() const {
  if (!is_constant()) throw Error("rational function is not a constant");
  return num_.coeff(0);
}

QRational QRational::operator-() const {
  QRational r = *this;
  r.num_ = -r.num_;
  return r;
}

QRational& QRational::operator+=(const QRational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QRational& QRational::operator-=(const QRational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QRational& QRational::operator*=(const QRational& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QRational& QRational::operator/=(const QRational& o) {
  if (o.is_zero()) throw DivisionByZero("rational function division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

bool operator<(const QRational& a, const QRational& b) {
  if (a.num_ != b.num_) return a.num_ < b.num_;
  return a.den_ < b.den_;
}

QRational QRational::pow(unsigned e) const {
  QRational result = one();
  QRational base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

std::string QRational::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace chromhess
