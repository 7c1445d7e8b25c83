#ifndef CHROMHESS_CANCELLATION_HPP
#define CHROMHESS_CANCELLATION_HPP

#include <string>
#include <vector>

#include "chromhess/graph.hpp"
#include "chromhess/qpoly.hpp"

namespace chromhess {

/// Colouring of {0..n-1} into {0} + {1..r} where every positive colour is
/// used at least once; colour 0 is optional.
class ZeroColouring {
public:
  ZeroColouring(int r, std::vector<int> assignment);

  int n() const { return static_cast<int>(assignment_.size()); }
  int r() const { return r_; }
  int operator()(int v) const { return assignment_[static_cast<size_t>(v)]; }
  const std::vector<int>& assignment() const { return assignment_; }

  friend bool operator==(const ZeroColouring& a, const ZeroColouring& b) {
    return a.r_ == b.r_ && a.assignment_ == b.assignment_;
  }
  friend bool operator!=(const ZeroColouring& a, const ZeroColouring& b) {
    return !(a == b);
  }
  friend bool operator<(const ZeroColouring& a, const ZeroColouring& b) {
    if (a.r_ != b.r_) return a.r_ < b.r_;
    return a.assignment_ < b.assignment_;
  }

private:
  int r_;
  std::vector<int> assignment_;
};

/// stat = (# vertices with positive colour) + (# weak ascents), with the
/// colour order 0 < 1 < ... < r.
int stat(const ZeroColouring& kappa, const OrderedGraph& g);

/// All zero-extended colourings of {0..n-1}, every r from 0 to n.
std::vector<ZeroColouring> enumerate_zero_colourings(int n);

/// Sum over all r and all zero-extended colourings of (-1)^r q^stat.
QRational alternating_sum(const OrderedGraph& g);

/// The stat-preserving pairing that flips the parity of r.  Requires at
/// least two vertices and the edge between the last two; throws
/// PreconditionViolated otherwise.
ZeroColouring cancelling_partner(const ZeroColouring& kappa,
                                 const OrderedGraph& g);

struct CancellationReport {
  std::string graph;    // Hessenberg notation when available, else edge list
  long terms = 0;       // number of colourings inspected
  long paired = 0;      // colourings matched into 2-cycles
  long fixed_points = 0;
  QRational sum;        // the alternating sum
  bool base_case = false;  // single-vertex graph: pairing does not apply
  bool pass = false;
};

/// Checks that the pairing is a stat-preserving sign-reversing involution
/// without fixed points, that the alternating sum vanishes, and that it
/// agrees with the convolved canonical character of the weak chromatic
/// image.  The single-vertex graph is reported as the base case with sum
/// 1 - q.
CancellationReport verify_cancellation(const OrderedGraph& g);

}  // namespace chromhess

#endif
