#ifndef CHROMHESS_QSYM_HPP
#define CHROMHESS_QSYM_HPP

#include <map>
#include <string>
#include <vector>

#include "chromhess/qpoly.hpp"

namespace chromhess {

/// Composition: a finite list of positive integers (possibly empty).
using Composition = std::vector<int>;
/// Partition: a weakly decreasing list of positive integers.
using Partition = std::vector<int>;

int weight(const Composition& alpha);
/// Sorted-descending rearrangement of a composition.
Partition sorted_partition(const Composition& alpha);

/// Quasisymmetric function in the monomial basis: a finite linear
/// combination of M_alpha with rational-function coefficients.  Terms are
/// keyed by composition in lexicographic order; no zero coefficients.
class QSymElement {
public:
  using TermMap = std::map<Composition, QRational>;

  QSymElement() = default;
  static QSymElement monomial(Composition alpha,
                              QRational c = QRational::one());
  static QSymElement unit() { return monomial({}); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QRational coeff(const Composition& alpha) const;
  void add_term(const Composition& alpha, const QRational& c);

  QSymElement& operator+=(const QSymElement& o);
  QSymElement& operator-=(const QSymElement& o);
  friend QSymElement operator+(QSymElement a, const QSymElement& b) {
    return a += b;
  }
  friend QSymElement operator-(QSymElement a, const QSymElement& b) {
    return a -= b;
  }
  /// Overlapping-shuffle product.
  friend QSymElement operator*(const QSymElement& a, const QSymElement& b);
  QSymElement scaled(const QRational& c) const;

  friend bool operator==(const QSymElement& a, const QSymElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const QSymElement& a, const QSymElement& b) {
    return !(a == b);
  }

  std::string str() const;

private:
  TermMap terms_;
};

/// True iff the coefficients are constant on rearrangement classes of
/// compositions, i.e. the element lies in the symmetric subspace.
bool is_symmetric(const QSymElement& x);

/// The canonical character: evaluation at x = (1, 0, 0, ...).  Sums the
/// coefficients of the empty and the one-part monomials.
QRational canonical_character(const QSymElement& x);

/// The canonical character composed with the convolution of the identity
/// and (antipode after the q-Eulerian map).  On a monomial M_alpha with r
/// parts this evaluates to
///   (-1)^(r-1) q^(alpha_2+...+alpha_r) + (-1)^r q^(alpha_1+...+alpha_r),
/// and to 1 on the empty composition; extended linearly.
QRational canonical_character_convolved(const QSymElement& x);

}  // namespace chromhess

#endif
