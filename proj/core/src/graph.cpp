#include "chromhess/graph.hpp"

#include <algorithm>
#include <sstream>

#include "chromhess/errors.hpp"

namespace chromhess {

OrderedGraph::OrderedGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_ || u == v) throw Error("edge outside vertex range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

OrderedGraph OrderedGraph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return OrderedGraph(n, std::move(edges));
}

bool OrderedGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::string OrderedGraph::str() const {
  std::ostringstream os;
  os << "G(n=" << n_ << ";";
  for (size_t i = 0; i < edges_.size(); ++i) {
    os << (i ? "," : " ") << edges_[i].first + 1 << "-" << edges_[i].second + 1;
  }
  os << ")";
  return os.str();
}

Colouring::Colouring(int r, std::vector<int> assignment)
    : r_(r), assignment_(std::move(assignment)) {
  for (int c : assignment_) {
    if (c < 0 || c >= r_) throw Error("colour outside declared range");
  }
}

std::vector<std::vector<int>> Colouring::classes() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(r_));
  for (int v = 0; v < n(); ++v) out[static_cast<size_t>((*this)(v))].push_back(v);
  return out;
}

EdgeKind classify_edge(const Colouring& kappa, int u, int v) {
  if (u > v) std::swap(u, v);
  if (kappa(u) == kappa(v)) return EdgeKind::Monochromatic;
  return kappa(u) < kappa(v) ? EdgeKind::Ascent : EdgeKind::Descent;
}

int ascent_count(const OrderedGraph& g, const Colouring& kappa,
                 AscentMode mode) {
  int count = 0;
  for (const auto& [u, v] : g.edges()) {
    const EdgeKind kind = classify_edge(kappa, u, v);
    if (kind == EdgeKind::Ascent ||
        (mode == AscentMode::Weak && kind == EdgeKind::Monochromatic)) {
      ++count;
    }
  }
  return count;
}

int monochromatic_count(const OrderedGraph& g, const Colouring& kappa) {
  int count = 0;
  for (const auto& [u, v] : g.edges()) {
    if (kappa(u) == kappa(v)) ++count;
  }
  return count;
}

bool is_proper(const OrderedGraph& g, const Colouring& kappa) {
  return monochromatic_count(g, kappa) == 0;
}

OrderedGraph induced_subgraph(const OrderedGraph& g,
                              std::span<const int> vertices) {
  std::vector<int> position(static_cast<size_t>(g.n()), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    position[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    const int pu = position[static_cast<size_t>(u)];
    const int pv = position[static_cast<size_t>(v)];
    if (pu >= 0 && pv >= 0) edges.emplace_back(pu, pv);
  }
  return OrderedGraph(static_cast<int>(vertices.size()), std::move(edges));
}

std::vector<OrderedGraph> restrict_by_colouring(const OrderedGraph& g,
                                                const Colouring& kappa) {
  std::vector<OrderedGraph> out;
  out.reserve(static_cast<size_t>(kappa.r()));
  for (const auto& cls : kappa.classes()) {
    out.push_back(induced_subgraph(g, cls));
  }
  return out;
}

OrderedGraph lex_union(std::span<const OrderedGraph> parts) {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  for (const auto& part : parts) {
    for (const auto& [u, v] : part.edges()) edges.emplace_back(u + n, v + n);
    n += part.n();
  }
  return OrderedGraph(n, std::move(edges));
}

OrderedGraph lex_union(const OrderedGraph& a, const OrderedGraph& b) {
  const OrderedGraph parts[] = {a, b};
  return lex_union(std::span<const OrderedGraph>(parts, 2));
}

std::vector<std::vector<int>> connected_components(const OrderedGraph& g) {
  std::vector<int> root(static_cast<size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) root[static_cast<size_t>(v)] = v;
  auto find = [&root](int v) {
    while (root[static_cast<size_t>(v)] != v) {
      root[static_cast<size_t>(v)] = root[static_cast<size_t>(root[static_cast<size_t>(v)])];
      v = root[static_cast<size_t>(v)];
    }
    return v;
  };
  for (const auto& [u, v] : g.edges()) {
    root[static_cast<size_t>(find(u))] = find(v);
  }
  std::vector<std::vector<int>> buckets(static_cast<size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) buckets[static_cast<size_t>(find(v))].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& bucket : buckets) {
    if (!bucket.empty()) out.push_back(std::move(bucket));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<OrderedGraph> decompose_multiplicative(const OrderedGraph& g) {
  // Sweep into minimal closed intervals: extend the block while an edge
  // crosses its right end.
  std::vector<int> reach(static_cast<size_t>(g.n()), 0);
  for (int v = 0; v < g.n(); ++v) reach[static_cast<size_t>(v)] = v;
  for (const auto& [u, v] : g.edges()) {
    reach[static_cast<size_t>(u)] = std::max(reach[static_cast<size_t>(u)], v);
  }
  std::vector<OrderedGraph> blocks;
  int start = 0;
  while (start < g.n()) {
    int end = start;
    for (int v = start; v <= end; ++v) {
      end = std::max(end, reach[static_cast<size_t>(v)]);
    }
    std::vector<int> vertices;
    for (int v = start; v <= end; ++v) vertices.push_back(v);
    OrderedGraph block = induced_subgraph(g, vertices);
    if (connected_components(block).size() != 1) {
      throw NotDecomposable("connected pieces interleave in the vertex order");
    }
    blocks.push_back(std::move(block));
    start = end + 1;
  }
  return blocks;
}

}  // namespace chromhess
