#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace turan {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected graph in compressed sparse row form. Neighbor lists are sorted.
/// A loop at v is stored once, as v in its own list, and counts 1 toward the degree.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list; (u, v) and (v, u) name the same edge.
  /// Throws InvalidGraph on out-of-range endpoints or repeated edges.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_loop(Vertex v) const noexcept;
  bool adjacent(Vertex u, Vertex v) const noexcept;

  std::size_t loop_count() const noexcept { return loops_; }
  /// Edges with loops counted once each.
  std::size_t edge_count() const noexcept { return (neighbors_.size() + loops_) / 2; }
  bool simple() const noexcept { return loops_ == 0; }

  /// Every edge once as (u, v) with u <= v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
  std::size_t loops_ = 0;
};

/// A simple graph whose vertices are labelled 1..n. Internally vertex label L is index L - 1.
class OrderedGraph {
 public:
  OrderedGraph() = default;
  /// Throws InvalidGraph if g has loops.
  explicit OrderedGraph(Graph g);

  std::size_t order() const noexcept { return graph_.order(); }
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }
  const Graph& graph() const noexcept { return graph_; }

  /// Edges with both endpoint labels <= n_prefix. Requires n_prefix <= order().
  std::uint64_t prefix_edges(std::size_t n_prefix) const;

  friend bool operator==(const OrderedGraph& a, const OrderedGraph& b) {
    return a.graph_ == b.graph_;
  }

 private:
  Graph graph_;
  // cumulative_[L] = number of edges inside labels 1..L.
  std::vector<std::uint64_t> cumulative_;
};

/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Disjoint union with b's vertices shifted after a's.
Graph disjoint_union(const Graph& a, const Graph& b);

Graph cycle_graph(std::size_t n);
Graph complete_bipartite(std::size_t left, std::size_t right);

}  // namespace turan
