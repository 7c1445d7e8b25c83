#ifndef CHROMHESS_SYM_HPP
#define CHROMHESS_SYM_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chromhess/qsym.hpp"

namespace chromhess {

/// Symmetric function in the power-sum basis: a finite linear combination
/// of p_lambda over partitions, with rational-function coefficients.
class SymElementP {
public:
  using TermMap = std::map<Partition, QRational>;

  SymElementP() = default;
  static SymElementP power_sum(Partition lambda,
                               QRational c = QRational::one());
  static SymElementP unit() { return power_sum({}); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QRational coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, const QRational& c);

  SymElementP& operator+=(const SymElementP& o);
  SymElementP& operator-=(const SymElementP& o);
  friend SymElementP operator+(SymElementP a, const SymElementP& b) {
    return a += b;
  }
  friend SymElementP operator-(SymElementP a, const SymElementP& b) {
    return a -= b;
  }
  /// Product: p_lambda * p_mu = p_(merge of parts).
  friend SymElementP operator*(const SymElementP& a, const SymElementP& b);
  SymElementP scaled(const QRational& c) const;

  friend bool operator==(const SymElementP& a, const SymElementP& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SymElementP& a, const SymElementP& b) {
    return !(a == b);
  }

  std::string str() const;

private:
  TermMap terms_;
};

/// The diagonal Hopf endomorphism determined by a coefficient sequence:
/// p_(k) maps to c(k) p_(k), extended multiplicatively and linearly.
SymElementP diagonal_endo(const SymElementP& x,
                          const std::function<QRational(int)>& c);

/// p_(k) -> (-1)^(k+1) p_(k), the classical involution.
SymElementP omega(const SymElementP& x);
/// p_(k) -> -p_(k), the antipode on the power-sum basis.
SymElementP antipode(const SymElementP& x);
/// p_(k) -> t^k p_(k).
SymElementP eulerian(const SymElementP& x, const QRational& t);
/// p_(k) -> (1 - q^k) p_(k): the convolution of the identity with
/// (antipode after the q-Eulerian map).
SymElementP one_minus_qk_endo(const SymElementP& x);

/// r-fold comultiplication on the power-sum basis: each part of a
/// partition is distributed independently to one of r slots.
std::map<std::vector<Partition>, QRational> sym_comultiply(
    const SymElementP& x, int r);

/// z(lambda) = prod over part values k of k^(m_k) * m_k!.
Rational z_factor(const Partition& lambda);

/// Kronecker product: p_lambda * p_mu = z(lambda) p_lambda when lambda =
/// mu, else 0, extended bilinearly.
SymElementP kronecker(const SymElementP& a, const SymElementP& b);

/// Expansion into the monomial basis of QSym (each p_(k) is the one-part
/// monomial, multiplied out by the overlapping shuffle).
QSymElement to_monomial_basis(const SymElementP& x);

/// Inverse of to_monomial_basis on symmetric inputs; throws Error when the
/// input is not symmetric.
SymElementP from_monomial_basis(const QSymElement& x);

/// All partitions of n, in lexicographically decreasing part order.
std::vector<Partition> partitions_of(int n);

}  // namespace chromhess

#endif
