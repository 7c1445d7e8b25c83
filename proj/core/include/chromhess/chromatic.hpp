#ifndef CHROMHESS_CHROMATIC_HPP
#define CHROMHESS_CHROMATIC_HPP

#include "chromhess/graph.hpp"
#include "chromhess/og_hopf.hpp"
#include "chromhess/qsym.hpp"

namespace chromhess {

/// The image of an ordered graph under the graded Hopf morphism into QSym
/// determined by a multiplicative character.  The coefficient of M_alpha is
/// the sum over colourings of type alpha of q^(# strict ascents) times the
/// product of character values on the colour-class restrictions; the result
/// is homogeneous of degree n.
QSymElement induced_qsym(const OrderedGraph& g, const GraphCharacter& zeta);

enum class ColouringWeight {
  ProperStrict,  // proper colourings, q per strict ascent
  AllStrict,     // all colourings, q per strict ascent
  AllWeak,       // all colourings, q per weak ascent
  MonoWeighted,  // all colourings, q per strict ascent, t per monochromatic edge
};

/// Direct enumeration of colourings by type, independent of the Hopf route
/// above.  This is the oracle the induced map is checked against.
QSymElement csf_bruteforce(const OrderedGraph& g, ColouringWeight mode,
                           const QRational& t = QRational());

/// Number of proper colourings with r colours.
Rational chromatic_polynomial(const OrderedGraph& g, int r);

/// All compositions of n (2^(n-1) of them; just the empty one for n = 0).
std::vector<Composition> compositions_of(int n);

}  // namespace chromhess

#endif
