#ifndef CHROMHESS_MOMENT_GRAPH_HPP
#define CHROMHESS_MOMENT_GRAPH_HPP

#include <map>
#include <vector>

#include "chromhess/hessenberg.hpp"
#include "chromhess/perm.hpp"

namespace chromhess {

/// Directed edge from `source` to `target` labelled by the variable pair
/// (i, j), i < j.  The target is the source with the images at positions i
/// and j swapped, and gains (i, j) as an inversion.
struct MomentEdge {
  int source;
  int target;
  int i;
  int j;
};

/// The moment graph of a Hessenberg function: vertices are all n!
/// bijections (stored as permutations w, the vertex sending the i-th right
/// variable to the w(i)-th left variable), and for every label (i, j) with
/// i < j <= h(i) there is an edge from each w with w(i) < w(j) to the
/// swapped permutation.  Vertices are stored in a topological order:
/// sorted by (inversion count, lexicographic), which every edge respects.
class MomentGraph {
public:
  explicit MomentGraph(HessenbergFunction h);

  int n() const { return h_.n(); }
  const HessenbergFunction& hessenberg() const { return h_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Perm>& vertices() const { return vertices_; }
  const Perm& vertex(int id) const { return vertices_[static_cast<size_t>(id)]; }
  int index_of(const Perm& w) const;

  const std::vector<MomentEdge>& edges() const { return edges_; }
  const std::vector<int>& in_edges(int id) const {
    return in_edges_[static_cast<size_t>(id)];
  }
  const std::vector<int>& out_edges(int id) const {
    return out_edges_[static_cast<size_t>(id)];
  }
  int in_degree(int id) const {
    return static_cast<int>(in_edges_[static_cast<size_t>(id)].size());
  }

  /// Vertex ids reachable from `id` along directed edges (including id),
  /// as a boolean mask.
  std::vector<bool> reachable_from(int id) const;

private:
  HessenbergFunction h_;
  std::vector<Perm> vertices_;
  std::map<Perm, int> index_;
  std::vector<MomentEdge> edges_;
  std::vector<std::vector<int>> in_edges_;
  std::vector<std::vector<int>> out_edges_;
};

}  // namespace chromhess

#endif
