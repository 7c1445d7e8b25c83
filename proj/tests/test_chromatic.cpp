#include <doctest.h>

#include "chromhess/chromatic.hpp"
#include "chromhess/hessenberg.hpp"
#include "chromhess/sym.hpp"
#include "test_support.hpp"

using namespace chromhess;
using namespace chromhess::testing;

namespace {

QSymElement M(Composition alpha, QRational c = QRational::one()) {
  return QSymElement::monomial(std::move(alpha), c);
}

// The fully abstract route: the coefficient of M_alpha extracted through
// the r-fold coproduct, degree projections and the character.  Used as a
// cross-check oracle for the type-enumeration implementation.
QSymElement induced_via_coproduct(const OrderedGraph& g,
                                  const GraphCharacter& zeta) {
  QSymElement out;
  for (const Composition& alpha : compositions_of(g.n())) {
    const int r = static_cast<int>(alpha.size());
    QRational coefficient;
    const OGTensor coproduct = og_comultiply(OGElement(g), r);
    for (const auto& [key, c] : coproduct.terms()) {
      bool graded = true;
      for (int s = 0; s < r; ++s) {
        if (key[static_cast<size_t>(s)].n() != alpha[static_cast<size_t>(s)]) {
          graded = false;
          break;
        }
      }
      if (!graded) continue;
      QRational factor = c;
      for (const auto& part : key) factor *= zeta(part);
      coefficient += factor;
    }
    out.add_term(alpha, coefficient);
  }
  return out;
}

}  // namespace

TEST_CASE("induced map on the one-edge graph") {
  const OrderedGraph k2 = gh("2,2");
  const QSymElement proper = induced_qsym(k2, GraphCharacter::proper_indicator());
  CHECK(proper == M({1, 1}, QRational::one() + QRational::q()));
  CHECK(proper == csf_bruteforce(k2, ColouringWeight::ProperStrict));

  const QSymElement weak = induced_qsym(k2, GraphCharacter::q_per_edge());
  CHECK(weak == M({2}, QRational::q()) +
                    M({1, 1}, QRational::one() + QRational::q()));
  CHECK(weak == csf_bruteforce(k2, ColouringWeight::AllWeak));

  for (const auto& zeta :
       {GraphCharacter::proper_indicator(), GraphCharacter::all_one(),
        GraphCharacter::q_per_edge()}) {
    CHECK(induced_qsym(OrderedGraph::empty(), zeta) == QSymElement::unit());
  }
}

TEST_CASE("brute-force enumeration examples") {
  CHECK(csf_bruteforce(gh("2,2"), ColouringWeight::ProperStrict) ==
        M({1, 1}, QRational::one() + QRational::q()));
  CHECK(csf_bruteforce(OrderedGraph::edgeless(2), ColouringWeight::ProperStrict) ==
        M({2}) + M({1, 1}, frac(2)));
  CHECK(csf_bruteforce(gh("2,2"), ColouringWeight::AllWeak) ==
        M({2}, QRational::q()) + M({1, 1}, QRational::one() + QRational::q()));
}

TEST_CASE("chromatic polynomial") {
  CHECK(chromatic_polynomial(gh("2,2"), 2) == Rational(2));
  CHECK(chromatic_polynomial(gh("2,2"), 1) == Rational(0));
  CHECK(chromatic_polynomial(OrderedGraph::single_vertex(), 5) == Rational(5));
  CHECK(chromatic_polynomial(OrderedGraph::empty(), 3) == Rational(1));
}

TEST_CASE("the proper-colouring map matches brute force on Hessenberg graphs") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& h : enumerate_hessenberg(n)) {
      const OrderedGraph g = graph_of(h);
      CHECK(induced_qsym(g, GraphCharacter::proper_indicator()) ==
            csf_bruteforce(g, ColouringWeight::ProperStrict));
    }
  }
}

TEST_CASE("all four character variants match their enumerations") {
  auto rng = make_rng(30);
  for (int trial = 0; trial < 15; ++trial) {
    const OrderedGraph g = random_graph(rng, 0, 4);
    CHECK(induced_qsym(g, GraphCharacter::proper_indicator()) ==
          csf_bruteforce(g, ColouringWeight::ProperStrict));
    CHECK(induced_qsym(g, GraphCharacter::all_one()) ==
          csf_bruteforce(g, ColouringWeight::AllStrict));
    CHECK(induced_qsym(g, GraphCharacter::q_per_edge()) ==
          csf_bruteforce(g, ColouringWeight::AllWeak));
    CHECK(induced_qsym(g, GraphCharacter::t_per_edge(qp(2))) ==
          csf_bruteforce(g, ColouringWeight::MonoWeighted, qp(2)));
  }
}

TEST_CASE("the induced map is a morphism for the product") {
  auto rng = make_rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const OrderedGraph a = random_graph(rng, 0, 3);
    const OrderedGraph b = random_graph(rng, 0, 3);
    for (const auto& zeta :
         {GraphCharacter::proper_indicator(), GraphCharacter::q_per_edge()}) {
      CHECK(induced_qsym(lex_union(a, b), zeta) ==
            induced_qsym(a, zeta) * induced_qsym(b, zeta));
    }
  }
}

TEST_CASE("specialization recovers the chromatic polynomial") {
  // Setting q = 1 and x = (1,...,1,0,...) with r ones turns the monomial
  // M_alpha into the number of increasing supports, binomial(r, #parts).
  auto binomial = [](int r, int k) {
    long result = 1;
    for (int i = 0; i < k; ++i) result = result * (r - i) / (i + 1);
    return result;
  };
  for (int n = 0; n <= 4; ++n) {
    for (const auto& h : enumerate_hessenberg(n)) {
      const OrderedGraph g = graph_of(h);
      const QSymElement csf = csf_bruteforce(g, ColouringWeight::ProperStrict);
      for (int r = 0; r <= 4; ++r) {
        Rational total(0);
        for (const auto& [alpha, c] : csf.terms()) {
          REQUIRE(c.is_polynomial());
          total += c.num().eval(Rational(1)) *
                   Rational(binomial(r, static_cast<int>(alpha.size())));
        }
        CHECK(total == chromatic_polynomial(g, r));
      }
    }
  }
}

TEST_CASE("Hessenberg images are symmetric functions") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& h : enumerate_hessenberg(n)) {
      const OrderedGraph g = graph_of(h);
      CHECK(is_symmetric(induced_qsym(g, GraphCharacter::proper_indicator())));
      CHECK(is_symmetric(induced_qsym(g, GraphCharacter::q_per_edge())));
    }
  }
}

TEST_CASE("type enumeration agrees with the abstract coproduct route") {
  auto rng = make_rng(32);
  for (int trial = 0; trial < 8; ++trial) {
    const OrderedGraph g = random_graph(rng, 0, 3);
    for (const auto& zeta :
         {GraphCharacter::proper_indicator(), GraphCharacter::all_one(),
          GraphCharacter::q_per_edge()}) {
      CHECK(induced_qsym(g, zeta) == induced_via_coproduct(g, zeta));
    }
  }
  for (int n = 0; n <= 3; ++n) {
    for (const auto& h : enumerate_hessenberg(n)) {
      const OrderedGraph g = graph_of(h);
      CHECK(induced_qsym(g, GraphCharacter::q_per_edge()) ==
            induced_via_coproduct(g, GraphCharacter::q_per_edge()));
    }
  }
}
