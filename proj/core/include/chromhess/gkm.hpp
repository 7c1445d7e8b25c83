#ifndef CHROMHESS_GKM_HPP
#define CHROMHESS_GKM_HPP

#include <functional>
#include <vector>

#include "chromhess/moment_graph.hpp"
#include "chromhess/mpoly.hpp"
#include "chromhess/qpoly.hpp"
#include "chromhess/sym.hpp"

namespace chromhess {

/// Element of the coordinate ring attached to a moment graph: one
/// polynomial in the right-hand variables per vertex, indexed by the
/// graph's vertex ids.
class GKMElement {
public:
  GKMElement(int n, int vertex_count)
      : n_(n),
        coords_(static_cast<size_t>(vertex_count), MPoly(n, VarFamily::R)) {}

  static GKMElement zeros(const MomentGraph& m) {
    return GKMElement(m.n(), m.vertex_count());
  }
  static GKMElement constant(const MomentGraph& m, const Rational& c);

  int n() const { return n_; }
  int vertex_count() const { return static_cast<int>(coords_.size()); }
  const MPoly& coord(int id) const { return coords_[static_cast<size_t>(id)]; }
  void set_coord(int id, MPoly p);
  const std::vector<MPoly>& coords() const { return coords_; }

  /// Coordinate-wise product with a polynomial in the right-hand variables
  /// (the module action).
  GKMElement multiplied(const MPoly& g) const;
  GKMElement& operator+=(const GKMElement& o);
  GKMElement& operator-=(const GKMElement& o);
  friend GKMElement operator+(GKMElement a, const GKMElement& b) { return a += b; }
  friend GKMElement operator-(GKMElement a, const GKMElement& b) { return a -= b; }

  friend bool operator==(const GKMElement& a, const GKMElement& b) {
    return a.n_ == b.n_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const GKMElement& a, const GKMElement& b) {
    return !(a == b);
  }

  /// All differences across labelled edges divisible by the corresponding
  /// variable difference.
  bool satisfies_edge_conditions(const MomentGraph& m) const;

  /// The same element in left-hand coordinates: the polynomial at a vertex
  /// w is the right-hand coordinate with each variable i replaced by the
  /// left-hand variable w(i).
  std::vector<MPoly> left_coords(const MomentGraph& m) const;

private:
  int n_;
  std::vector<MPoly> coords_;
};

/// The action of a permutation of the left-hand variables: linear over the
/// right-hand variables, transporting the coordinate at vertex w to vertex
/// u*w unchanged.
GKMElement dot_action(const Perm& u, const GKMElement& x,
                      const MomentGraph& m);

/// Runs the vertex-by-vertex construction: visits vertices in topological
/// order, asks the chooser for a polynomial, and verifies every incoming
/// edge condition immediately (throwing ChooserViolation on failure).
GKMElement build_element(
    const MomentGraph& m,
    const std::function<MPoly(int id, const GKMElement& partial)>& chooser);

/// The deterministic flow-up element for a vertex: zero off the reachable
/// set, the product of incoming edge labels at the vertex itself, and
/// downstream the homogeneous solution (of the same degree) of the
/// incoming-edge congruences, computed by echelon elimination with free
/// coefficients set to `free_value`.
GKMElement flow_up_vector(const MomentGraph& m, int id,
                          const Rational& free_value = Rational(0));

/// Flow-up basis of the edge-condition subring, with coordinate extraction
/// and graded traces over either polynomial subring.
class FlowUpBasis {
public:
  /// Builds every flow-up element; jobs = 0 uses one thread per core.
  explicit FlowUpBasis(const MomentGraph& m,
                       const Rational& free_value = Rational(0), int jobs = 1);

  const MomentGraph& graph() const { return *graph_; }
  const GKMElement& element(int id) const {
    return basis_[static_cast<size_t>(id)];
  }
  /// Homogeneous degree of the basis element = in-degree of its vertex.
  int degree(int id) const { return degrees_[static_cast<size_t>(id)]; }

  /// Unique expansion coefficients of x in the basis, as polynomials in
  /// the chosen variable family; throws NotInSpan if none exist.
  std::vector<MPoly> coordinates(const GKMElement& x, VarFamily ring) const;

  /// Sum over basis elements of q^degree times the (constant) diagonal
  /// coefficient of the permutation action; throws NonScalarDiagonal if a
  /// diagonal coefficient fails to be constant.
  QPoly graded_trace(const Perm& u, VarFamily ring) const;

private:
  // Runs the triangular elimination only through `stop_id` and returns the
  // expansion coefficient there; identical to coordinates(x, ring)[stop_id]
  // but skips the unreachable tail.  Trace computations use this path.
  MPoly expansion_coefficient(const GKMElement& x, VarFamily ring,
                              int stop_id) const;

  const MomentGraph* graph_;
  std::vector<GKMElement> basis_;
  std::vector<int> degrees_;
  std::vector<std::vector<MPoly>> left_basis_;  // cached left-hand coordinates
};

/// Graded Frobenius characteristic of the permutation action on the
/// edge-condition subring over the chosen polynomial subring:
/// (1/n!) sum over w of tr_q(w) p_(cycle type of w).
/// jobs = 0 uses one thread per hardware core.
SymElementP frobenius(const FlowUpBasis& basis, VarFamily ring, int jobs = 0);
SymElementP frobenius(const HessenbergFunction& h, VarFamily ring,
                      int jobs = 0);

/// The generator of the sign-isotypic line: coordinate at vertex w is
/// (-1)^(inversions of w) times the product of (R_i - R_j) over all edges
/// {i, j} of the Hessenberg graph.
GKMElement sign_element(const MomentGraph& m);

/// Graded Frobenius characteristic of the permutation action on the
/// polynomial ring itself: over the left-hand family each permutation
/// contributes prod 1/(1-q^cycle_length), over the right-hand family the
/// action is trivial and each contributes 1/(1-q)^n.
SymElementP poly_ring_frobenius(int n, VarFamily ring);

}  // namespace chromhess

#endif
