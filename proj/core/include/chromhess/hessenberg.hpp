#ifndef CHROMHESS_HESSENBERG_HPP
#define CHROMHESS_HESSENBERG_HPP

#include <string>
#include <vector>

#include "chromhess/graph.hpp"

namespace chromhess {

/// Hessenberg function h: {0..n-1} -> {0..n-1} with i <= h(i) and h
/// nondecreasing.  Stored 0-based; the textual form "2,3,3" is 1-based.
class HessenbergFunction {
public:
  HessenbergFunction() = default;
  explicit HessenbergFunction(std::vector<int> values);  // throws InvalidH

  /// Parses the 1-based comma-separated form, e.g. "2,3,3".
  static HessenbergFunction parse(const std::string& text);
  static HessenbergFunction complete(int n);  // h(i) = n-1
  static HessenbergFunction minimal(int n);   // h(i) = i

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[static_cast<size_t>(i)]; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const HessenbergFunction& a,
                         const HessenbergFunction& b) {
    return a.values_ == b.values_;
  }
  friend bool operator<(const HessenbergFunction& a,
                        const HessenbergFunction& b) {
    return a.values_ < b.values_;
  }

  std::string str() const;  // 1-based, e.g. "2,3,3"; "-" for n = 0

private:
  std::vector<int> values_;
};

/// The ordered graph with an edge {i, j} iff i < j <= h(i).
OrderedGraph graph_of(const HessenbergFunction& h);

/// Inverse of graph_of; throws NotUnitInterval when g fails the closure
/// condition (an edge {i, j} forces every {i', j'} with i <= i' < j' <= j).
HessenbergFunction hessenberg_of(const OrderedGraph& g);

/// All Hessenberg functions on {0..n-1} in lexicographic order of value
/// sequences; Catalan(n) of them.
std::vector<HessenbergFunction> enumerate_hessenberg(int n);

/// Concatenation: the Hessenberg function whose graph is the lexicographic
/// union of the two graphs.
HessenbergFunction concat(const HessenbergFunction& a,
                          const HessenbergFunction& b);

}  // namespace chromhess

#endif
