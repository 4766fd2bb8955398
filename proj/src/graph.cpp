#include "turan/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "turan/errors.hpp"

namespace turan {

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  Graph g;
  g.offsets_.assign(order + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= order || v >= order) {
      throw InvalidGraph("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") out of range for order " + std::to_string(order));
    }
    ++g.offsets_[u + 1];
    if (u != v) ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < order; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.neighbors_.resize(g.offsets_[order]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.neighbors_[fill[u]++] = v;
    if (u != v) {
      g.neighbors_[fill[v]++] = u;
    } else {
      ++g.loops_;
    }
  }
  for (std::size_t v = 0; v < order; ++v) {
    auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw InvalidGraph("repeated edge at vertex " + std::to_string(v));
    }
  }
  return g;
}

bool Graph::has_loop(Vertex v) const noexcept { return adjacent(v, v); }

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u <= v) out.emplace_back(u, v);
    }
  }
  return out;
}

OrderedGraph::OrderedGraph(Graph g) : graph_(std::move(g)) {
  if (!graph_.simple()) throw InvalidGraph("ordered graphs must be simple");
  cumulative_.assign(graph_.order() + 1, 0);
  for (Vertex v = 0; v < graph_.order(); ++v) {
    const auto nb = graph_.neighbors(v);
    const auto back = std::lower_bound(nb.begin(), nb.end(), v) - nb.begin();
    cumulative_[v + 1] = cumulative_[v] + static_cast<std::uint64_t>(back);
  }
}

std::uint64_t OrderedGraph::prefix_edges(std::size_t n_prefix) const {
  if (n_prefix > order()) {
    throw std::out_of_range("prefix " + std::to_string(n_prefix) + " exceeds order " +
                            std::to_string(order()));
  }
  return cumulative_[n_prefix];
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw DimensionMismatch("permutation size differs from order");
  auto edges = g.edges();
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  return Graph::from_edges(g.order(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.order() + b.order(), edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(std::size_t left, std::size_t right) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < left; ++i) {
    for (std::size_t j = 0; j < right; ++j) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(left + j));
    }
  }
  return Graph::from_edges(left + right, edges);
}

}  // namespace turan
