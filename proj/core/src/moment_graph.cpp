#include "chromhess/moment_graph.hpp"

#include <algorithm>

#include "chromhess/errors.hpp"

namespace chromhess {

MomentGraph::MomentGraph(HessenbergFunction h) : h_(std::move(h)) {
  const int n = h_.n();
  vertices_ = Perm::all(n);
  std::stable_sort(vertices_.begin(), vertices_.end(),
                   [](const Perm& a, const Perm& b) {
                     const int ia = a.inversions();
                     const int ib = b.inversions();
                     if (ia != ib) return ia < ib;
                     return a < b;
                   });
  for (int id = 0; id < vertex_count(); ++id) {
    index_.emplace(vertices_[static_cast<size_t>(id)], id);
  }
  in_edges_.resize(vertices_.size());
  out_edges_.resize(vertices_.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= h_(i); ++j) {
      for (int source = 0; source < vertex_count(); ++source) {
        const Perm& w = vertices_[static_cast<size_t>(source)];
        if (w(i) > w(j)) continue;  // (i, j) already an inversion
        const int target = index_of(w.with_positions_swapped(i, j));
        const int edge_id = static_cast<int>(edges_.size());
        edges_.push_back(MomentEdge{source, target, i, j});
        out_edges_[static_cast<size_t>(source)].push_back(edge_id);
        in_edges_[static_cast<size_t>(target)].push_back(edge_id);
      }
    }
  }
}

int MomentGraph::index_of(const Perm& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw Error("permutation is not a vertex");
  return it->second;
}

std::vector<bool> MomentGraph::reachable_from(int id) const {
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<int> stack{id};
  seen[static_cast<size_t>(id)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e : out_edges_[static_cast<size_t>(v)]) {
      const int t = edges_[static_cast<size_t>(e)].target;
      if (!seen[static_cast<size_t>(t)]) {
        seen[static_cast<size_t>(t)] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

}  // namespace chromhess
