#include "spex/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spex {

namespace {

int words_for(int n) { return (n + 63) / 64; }

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  n_ = n;
  words_ = words_for(n);
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet out;
  auto r = row(v);
  for (int i = 0; i < words_; ++i) {
    std::uint64_t w = r[i];
    while (w) {
      out.push_back(i * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  check_vertex(v);
  return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}
GraphBuilder::GraphBuilder(Graph g) : g_(std::move(g)) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (g_.adjacent(u, v)) return *this;
  const auto w = g_.words_;
  g_.bits_[static_cast<std::size_t>(u) * w + v / 64] |= std::uint64_t{1} << (v % 64);
  g_.bits_[static_cast<std::size_t>(v) * w + u / 64] |= std::uint64_t{1} << (u % 64);
  ++g_.edges_;
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  if (u == v || !g_.adjacent(u, v)) return *this;
  const auto w = g_.words_;
  g_.bits_[static_cast<std::size_t>(u) * w + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  g_.bits_[static_cast<std::size_t>(v) * w + u / 64] &= ~(std::uint64_t{1} << (u % 64));
  --g_.edges_;
  return *this;
}

GraphBuilder& GraphBuilder::isolate(Vertex v) {
  for (Vertex w : g_.neighbors(v)) remove_edge(v, w);
  return *this;
}

int PartitionSpec::order() const {
  return std::accumulate(parts.begin(), parts.end(), 0) + remainder;
}

void PartitionSpec::validate() const {
  for (int b : parts) {
    if (b < 1) throw std::invalid_argument("partition parts must be positive");
  }
  if (remainder < 0) throw std::invalid_argument("partition remainder must be non-negative");
}

Graph PartitionSpec::realize() const { return complete_multipartite(*this); }

Graph make_graph(int n, const EdgeList& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph star_graph(int leaves) { return join(complete_graph(1), empty_graph(leaves)); }

Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

Graph join(const Graph& g, const Graph& h) {
  const int a = g.order();
  GraphBuilder b(a + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(a + u, a + v);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < h.order(); ++v) b.add_edge(u, a + v);
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int a = g.order();
  GraphBuilder b(a + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(a + u, a + v);
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<int> turan_part_sizes(int n, int k) {
  if (k < 1) throw std::invalid_argument("Turan graph needs at least one part");
  if (n < 0) throw std::invalid_argument("Turan graph order must be non-negative");
  const int parts = std::min(n, k);
  std::vector<int> sizes;
  for (int i = 0; i < parts; ++i) sizes.push_back(n / k + (i < n % k ? 1 : 0));
  return sizes;
}

Graph turan(int n, int k) {
  return complete_multipartite(PartitionSpec{turan_part_sizes(n, k), 0});
}

Graph complete_multipartite(const PartitionSpec& spec) {
  spec.validate();
  std::vector<int> blocks = spec.parts;
  if (spec.remainder > 0) blocks.push_back(spec.remainder);
  GraphBuilder b(spec.order());
  std::vector<int> start(blocks.size() + 1, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) start[i + 1] = start[i] + blocks[i];
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      for (Vertex u = start[i]; u < start[i + 1]; ++u)
        for (Vertex v = start[j]; v < start[j + 1]; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

VertexSet neighborhood(const Graph& g, Vertex v) { return g.neighbors(v); }

VertexSet second_neighborhood(const Graph& g, Vertex v) {
  std::vector<char> seen(g.order(), 0);
  seen[v] = 1;
  const auto first = g.neighbors(v);
  for (Vertex w : first) seen[w] = 1;
  VertexSet out;
  for (Vertex w : first)
    for (Vertex x : g.neighbors(w))
      if (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
      }
  std::sort(out.begin(), out.end());
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  GraphBuilder b(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(b).build();
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
  VertexSet keep;
  for (Vertex w = 0; w < g.order(); ++w)
    if (w != v) keep.push_back(w);
  return induced_subgraph(g, keep);
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("permutation size does not match graph order");
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<int> label(g.order(), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    VertexSet comp{s};
    label[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (label[w] < 0) {
          label[w] = label[s];
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

}  // namespace spex
