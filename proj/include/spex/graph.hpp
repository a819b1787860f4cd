#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spex {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using EdgeList = std::vector<Edge>;
/// Sorted ascending, duplicate free.
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..n-1, stored as bit rows of the
/// adjacency matrix. Values are immutable once built; use GraphBuilder to
/// assemble one.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return edges_; }

  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  VertexSet neighbors(Vertex v) const;
  /// Edges as (u, v) with u < v, in lexicographic order.
  EdgeList edges() const;
  std::vector<int> degrees() const;

  /// Raw bit row of v; bit w of the row is set iff v ~ w.
  std::span<const std::uint64_t> row(Vertex v) const;
  int words_per_row() const noexcept { return words_; }

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int words_ = 0;
  std::int64_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(Graph g);

  int order() const noexcept { return g_.n_; }
  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

  /// Adding an existing edge is a no-op. Loops and out-of-range vertices throw.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  /// Removes every edge incident to v.
  GraphBuilder& isolate(Vertex v);

  const Graph& view() const noexcept { return g_; }
  Graph build() const& { return g_; }
  Graph build() && { return std::move(g_); }

 private:
  Graph g_;
};

/// Multipartite part sizes plus an independent remainder joined to every part.
struct PartitionSpec {
  std::vector<int> parts;
  int remainder = 0;

  int order() const;
  /// Throws std::invalid_argument on a non-positive part or negative remainder.
  void validate() const;
  Graph realize() const;

  bool operator==(const PartitionSpec&) const = default;
};

Graph make_graph(int n, const EdgeList& edges);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);

/// Vertices of g first, then those of h, plus every edge between them.
Graph join(const Graph& g, const Graph& h);
/// Disjoint union; vertices of g first.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

/// Part sizes of the Turan graph T(n, k), largest first. When k > n only n
/// parts of size one survive, so the realized graph is K_n.
std::vector<int> turan_part_sizes(int n, int k);
Graph turan(int n, int k);
/// Parts in order, then the remainder block.
Graph complete_multipartite(const PartitionSpec& spec);

VertexSet neighborhood(const Graph& g, Vertex v);
/// Vertices at distance exactly two from v.
VertexSet second_neighborhood(const Graph& g, Vertex v);

/// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Graph delete_vertex(const Graph& g, Vertex v);
/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace spex
