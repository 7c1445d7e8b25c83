#ifndef CHROMHESS_GRAPH_HPP
#define CHROMHESS_GRAPH_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chromhess {

/// Simple graph on the ordered vertex set {0 < 1 < ... < n-1}, which is the
/// canonical representative of its isomorphism class of ordered graphs.
/// Edges are stored as sorted pairs (u < v) without duplicates, so two
/// ordered graphs are isomorphic iff they compare equal.
class OrderedGraph {
public:
  OrderedGraph() : n_(0) {}
  OrderedGraph(int n, std::vector<std::pair<int, int>> edges);

  static OrderedGraph empty() { return OrderedGraph(); }
  static OrderedGraph single_vertex() { return OrderedGraph(1, {}); }
  static OrderedGraph edgeless(int n) { return OrderedGraph(n, {}); }
  static OrderedGraph complete(int n);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int u, int v) const;

  friend bool operator==(const OrderedGraph& a, const OrderedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const OrderedGraph& a, const OrderedGraph& b) {
    return !(a == b);
  }
  friend bool operator<(const OrderedGraph& a, const OrderedGraph& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.edges_ < b.edges_;
  }

  std::string str() const;  // e.g. "G(n=3; 12,23)" with 1-based vertices

private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
};

/// Colouring of {0..n-1} with colours {0..r-1}.
class Colouring {
public:
  Colouring(int r, std::vector<int> assignment);

  int n() const { return static_cast<int>(assignment_.size()); }
  int r() const { return r_; }
  int operator()(int v) const { return assignment_[static_cast<size_t>(v)]; }
  const std::vector<int>& assignment() const { return assignment_; }

  /// Vertices of each colour class, in colour order.
  std::vector<std::vector<int>> classes() const;

private:
  int r_;
  std::vector<int> assignment_;
};

enum class EdgeKind { Monochromatic, Ascent, Descent };
enum class AscentMode { Strict, Weak };

/// Classifies the edge {u, v}, u < v, under the colouring.
EdgeKind classify_edge(const Colouring& kappa, int u, int v);

int ascent_count(const OrderedGraph& g, const Colouring& kappa,
                 AscentMode mode);
int monochromatic_count(const OrderedGraph& g, const Colouring& kappa);
bool is_proper(const OrderedGraph& g, const Colouring& kappa);

/// Restriction to the colour classes, in colour order: one canonical graph
/// per colour (empty classes give the empty graph).  Only monochromatic
/// edges survive.
std::vector<OrderedGraph> restrict_by_colouring(const OrderedGraph& g,
                                                const Colouring& kappa);

/// Induced subgraph on the given vertices (ascending), relabelled to
/// canonical form.
OrderedGraph induced_subgraph(const OrderedGraph& g,
                              std::span<const int> vertices);

/// Disjoint union with every vertex of an earlier summand below every
/// vertex of a later one, relabelled to canonical form.
OrderedGraph lex_union(std::span<const OrderedGraph> parts);
OrderedGraph lex_union(const OrderedGraph& a, const OrderedGraph& b);

/// Connected components as sorted vertex sets, ordered by minimum vertex.
std::vector<std::vector<int>> connected_components(const OrderedGraph& g);

/// The unique finest factorisation of g into connected graphs occupying
/// contiguous vertex intervals, so that their lex_union is g.  Throws
/// NotDecomposable when components interleave in the vertex order.
std::vector<OrderedGraph> decompose_multiplicative(const OrderedGraph& g);

}  // namespace chromhess

#endif
