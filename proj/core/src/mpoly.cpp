#include "chromhess/mpoly.hpp"

#include <numeric>
#include <sstream>

#include "chromhess/errors.hpp"

namespace chromhess {

bool GrlexLess::operator()(const std::vector<int>& a,
                           const std::vector<int>& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

MPoly MPoly::constant(int nvars, VarFamily family, const Rational& c) {
  MPoly p(nvars, family);
  if (!c.is_zero()) p.terms_.emplace(std::vector<int>(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, VarFamily family, int i) {
  MPoly p(nvars, family);
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MPoly MPoly::difference(int nvars, VarFamily family, int i, int j) {
  MPoly p = variable(nvars, family, i);
  std::vector<int> e(nvars, 0);
  e[j] = 1;
  p.terms_.emplace(std::move(e), Rational(-1));
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational MPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("polynomial is not a constant");
  return terms_.begin()->second;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& lead = terms_.rbegin()->first;  // grlex maximum
  return std::accumulate(lead.begin(), lead.end(), 0);
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto& low = terms_.begin()->first;
  const int d = std::accumulate(low.begin(), low.end(), 0);
  return d == total_degree();
}

void MPoly::add_term(const std::vector<int>& exponents, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::check_compatible(const MPoly& o) const {
  if (nvars_ != o.nvars_ || family_ != o.family_) {
    throw FamilyMismatch("mixed polynomial families: " +
                         std::string(family_name(family_)) + "[" +
                         std::to_string(nvars_) + "] vs " +
                         family_name(o.family_) + "[" +
                         std::to_string(o.nvars_) + "]");
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_compatible(b);
  MPoly out(a.nvars_, a.family_);
  std::vector<int> e(static_cast<size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int k = 0; k < a.nvars_; ++k) e[static_cast<size_t>(k)] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly MPoly::scaled(const Rational& c) const {
  MPoly r(nvars_, family_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

MPoly MPoly::substituted(int i, int j) const {
  MPoly out(nvars_, family_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> f = e;
    f[j] += f[i];
    f[i] = 0;
    out.add_term(f, c);
  }
  return out;
}

bool MPoly::divisible_by_difference(int i, int j) const {
  return substituted(i, j).is_zero();
}

MPoly MPoly::permuted(const std::vector<int>& sigma, VarFamily retag) const {
  MPoly out(nvars_, retag);
  for (const auto& [e, c] : terms_) {
    std::vector<int> f(static_cast<size_t>(nvars_), 0);
    for (int k = 0; k < nvars_; ++k) f[static_cast<size_t>(sigma[k])] = e[k];
    out.terms_.emplace(std::move(f), c);  // permutation is injective on monomials
  }
  return out;
}

MPoly MPoly::exact_divide(const MPoly& g, const MPoly& d) {
  g.check_compatible(d);
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  MPoly rem = g;
  MPoly quo(g.nvars_, g.family_);
  const auto& dlead = *d.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    std::vector<int> e(static_cast<size_t>(g.nvars_));
    bool divides = true;
    for (int k = 0; k < g.nvars_; ++k) {
      e[static_cast<size_t>(k)] = rlead.first[k] - dlead.first[k];
      if (e[static_cast<size_t>(k)] < 0) {
        divides = false;
        break;
      }
    }
    if (!divides) throw NotDivisible("no exact polynomial quotient");
    const Rational c = rlead.second / dlead.second;
    MPoly term(g.nvars_, g.family_);
    term.terms_.emplace(e, c);
    rem -= term * d;
    quo.add_term(e, c);
  }
  return quo;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print leading (grlex-largest) terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    std::ostringstream mono;
    bool any = false;
    for (int k = 0; k < nvars_; ++k) {
      const int e = it->first[k];
      if (e == 0) continue;
      if (any) mono << "*";
      mono << family_name(family_) << (k + 1);
      if (e > 1) mono << "^" << e;
      any = true;
    }
    if (!any) {
      os << mag.str();
    } else {
      if (!mag.is_one()) os << mag.str() << "*";
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace chromhess
