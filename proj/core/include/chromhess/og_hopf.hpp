#ifndef CHROMHESS_OG_HOPF_HPP
#define CHROMHESS_OG_HOPF_HPP

#include <map>
#include <string>
#include <vector>

#include "chromhess/graph.hpp"
#include "chromhess/qpoly.hpp"

namespace chromhess {

/// Formal linear combination of canonical ordered graphs over the rational
/// functions in q.  No zero coefficients are stored.
class OGElement {
public:
  using TermMap = std::map<OrderedGraph, QRational>;

  OGElement() = default;
  explicit OGElement(const OrderedGraph& g) { terms_.emplace(g, QRational::one()); }

  static OGElement unit() { return OGElement(OrderedGraph::empty()); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QRational coeff(const OrderedGraph& g) const;
  void add_term(const OrderedGraph& g, const QRational& c);

  OGElement& operator+=(const OGElement& o);
  OGElement& operator-=(const OGElement& o);
  friend OGElement operator+(OGElement a, const OGElement& b) { return a += b; }
  friend OGElement operator-(OGElement a, const OGElement& b) { return a -= b; }
  OGElement scaled(const QRational& c) const;

  friend bool operator==(const OGElement& a, const OGElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const OGElement& a, const OGElement& b) {
    return !(a == b);
  }

  std::string str() const;

private:
  TermMap terms_;
};

/// Formal linear combination of r-tuples of canonical ordered graphs.
class OGTensor {
public:
  using Key = std::vector<OrderedGraph>;
  using TermMap = std::map<Key, QRational>;

  explicit OGTensor(int arity) : arity_(arity) {}
  static OGTensor pure(Key factors);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QRational coeff(const Key& k) const;
  void add_term(const Key& k, const QRational& c);

  OGTensor& operator+=(const OGTensor& o);
  OGTensor& operator-=(const OGTensor& o);
  friend OGTensor operator+(OGTensor a, const OGTensor& b) { return a += b; }
  friend OGTensor operator-(OGTensor a, const OGTensor& b) { return a -= b; }
  OGTensor scaled(const QRational& c) const;

  friend bool operator==(const OGTensor& a, const OGTensor& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const OGTensor& a, const OGTensor& b) {
    return !(a == b);
  }

private:
  int arity_;
  TermMap terms_;
};

/// r-fold multiplication: the bilinear extension of lexicographic union.
OGElement og_multiply(const OGTensor& x);

/// r-fold comultiplication: the sum over all colourings kappa: V -> [r] of
/// q^(# strict ascents of kappa) times the restriction tuple.
OGTensor og_comultiply(const OGElement& x, int r);

/// Projection onto the span of graphs with exactly n vertices.
OGElement grade_project(const OGElement& x, int n);

/// Multiplicative character on ordered graphs: a function of the edge count
/// only, except for the proper-colouring indicator which vanishes on any
/// graph with an edge.
class GraphCharacter {
public:
  /// 1 on edgeless graphs, 0 otherwise.
  static GraphCharacter proper_indicator();
  /// Constantly 1.
  static GraphCharacter all_one();
  /// q^(# edges).
  static GraphCharacter q_per_edge();
  /// t^(# edges) for a fixed t.
  static GraphCharacter t_per_edge(QRational t);

  QRational operator()(const OrderedGraph& g) const;

private:
  enum class Kind { ProperIndicator, AllOne, PerEdgeWeight };
  GraphCharacter(Kind kind, QRational weight)
      : kind_(kind), weight_(std::move(weight)) {}
  Kind kind_;
  QRational weight_;
};

/// Linear extension of a character to combinations of graphs.
QRational og_character(const OGElement& x, const GraphCharacter& zeta);

}  // namespace chromhess

#endif
