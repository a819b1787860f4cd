#include "spex/forbidden.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace spex {

ForbiddenFamily ForbiddenFamily::linear_forest(int k, int s) {
  ForbiddenFamily f{k, s, true, false};
  f.validate();
  return f;
}

ForbiddenFamily ForbiddenFamily::matching(int k, int s) {
  ForbiddenFamily f{k, s, false, true};
  f.validate();
  return f;
}

double ForbiddenFamily::alpha() const noexcept {
  const double h1 = h() + 1.0;
  return 1.0 / (36.0 * h1 * h1 * h1);
}

void ForbiddenFamily::validate() const {
  if (k < 2) throw std::invalid_argument("clique parameter k must be at least 2");
  if (s < 2) throw std::invalid_argument("linear forest size s must be at least 2");
}

std::string_view to_string(Witness::Kind kind) {
  switch (kind) {
    case Witness::Kind::none: return "none";
    case Witness::Kind::clique: return "clique";
    case Witness::Kind::linear_forest: return "linear-forest";
    case Witness::Kind::matching: return "matching";
  }
  return "none";
}

namespace {

// Vertices of a false-twin class (equal open neighborhoods, hence pairwise
// non-adjacent) are interchangeable. A search structure that touches at most
// `keep(|class|, |N|)` of them can be found on the graph with the surplus
// twins deleted, so each solver runs on the reduced graph and maps its
// witness back.
struct Reduced {
  Graph graph;
  std::vector<Vertex> original;
};

Reduced reduce_false_twins(const Graph& g, const std::function<int(int, int)>& keep) {
  std::map<std::vector<std::uint64_t>, std::vector<Vertex>> classes;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto r = g.row(v);
    classes[std::vector<std::uint64_t>(r.begin(), r.end())].push_back(v);
  }
  VertexSet kept;
  for (const auto& [row, members] : classes) {
    int nbhd = 0;
    for (auto w : row) nbhd += std::popcount(w);
    const int count = std::min(static_cast<int>(members.size()),
                               keep(static_cast<int>(members.size()), nbhd));
    kept.insert(kept.end(), members.begin(), members.begin() + count);
  }
  std::sort(kept.begin(), kept.end());
  return {induced_subgraph(g, kept), kept};
}

EdgeList lift(const EdgeList& edges, const std::vector<Vertex>& original) {
  EdgeList out;
  for (auto [u, v] : edges) {
    auto a = original[u], b = original[v];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- cliques: branch and bound with a greedy colouring bound ----

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, int target) : g_(g), words_(g.words_per_row()), target_(target) {}

  VertexSet run() {
    Bits all(words_, 0);
    for (Vertex v = 0; v < g_.order(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    if (g_.order() > 0) expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  using Bits = std::vector<std::uint64_t>;

  static bool empty(const Bits& b) {
    return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
  }
  static int first(const Bits& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i]) return static_cast<int>(i * 64) + std::countr_zero(b[i]);
    return -1;
  }
  static void reset(Bits& b, int v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

  void expand(Bits candidates) {
    std::vector<int> order;
    std::vector<int> colour;
    Bits uncoloured = candidates;
    for (int c = 1; !empty(uncoloured); ++c) {
      Bits q = uncoloured;
      while (!empty(q)) {
        const int v = first(q);
        reset(q, v);
        reset(uncoloured, v);
        auto row = g_.row(v);
        for (int i = 0; i < words_; ++i) q[i] &= ~row[i];
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current_.size()) + colour[i] <= static_cast<int>(best_.size())) return;
      const int v = order[i];
      current_.push_back(v);
      Bits next(words_);
      auto row = g_.row(v);
      for (int w = 0; w < words_; ++w) next[w] = candidates[w] & row[w];
      if (empty(next)) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      if (static_cast<int>(best_.size()) >= target_) return;
      reset(candidates, v);
    }
  }

  const Graph& g_;
  int words_;
  int target_;
  VertexSet current_;
  VertexSet best_;
};

VertexSet clique_search(const Graph& g, int target) {
  auto reduced = reduce_false_twins(g, [](int, int) { return 1; });
  auto local = CliqueSearch(reduced.graph, target).run();
  VertexSet out;
  for (Vertex v : local) out.push_back(reduced.original[v]);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- linear forests: include/exclude branching over edges ----
//
// A partial selection is always a linear forest (every degree <= 2, no
// cycle). The bound on what the undecided edges can still add is the minimum
// of: the number of feasible edges left, half the total residual degree
// capacity, and the residual capacity of a greedy vertex cover of the
// feasible edges (each edge is charged to a cover vertex, and a vertex can
// absorb at most 2 - deg of them).

class LinearForestSearch {
 public:
  LinearForestSearch(const Graph& g, int target)
      : n_(g.order()),
        edges_(g.edges()),
        target_(target),
        deg_(n_, 0),
        parent_(n_),
        rank_(n_, 0) {
    for (int v = 0; v < n_; ++v) parent_[v] = v;
  }

  EdgeList run() {
    greedy();
    if (static_cast<int>(best_.size()) < target_) recurse(0);
    return best_;
  }

 private:
  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool feasible(const Edge& e) const {
    return deg_[e.first] < 2 && deg_[e.second] < 2 && find(e.first) != find(e.second);
  }

  void include(const Edge& e) {
    int a = find(e.first), b = find(e.second);
    if (rank_[a] < rank_[b]) std::swap(a, b);
    history_.push_back({b, rank_[a] == rank_[b] ? a : -1});
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    ++deg_[e.first];
    ++deg_[e.second];
    current_.push_back(e);
  }

  void undo(const Edge& e) {
    auto [child, bumped] = history_.back();
    history_.pop_back();
    if (bumped >= 0) --rank_[bumped];
    parent_[child] = child;
    --deg_[e.first];
    --deg_[e.second];
    current_.pop_back();
  }

  void greedy() {
    for (const auto& e : edges_)
      if (feasible(e)) include(e);
    best_ = current_;
    for (auto it = best_.rbegin(); it != best_.rend(); ++it) undo(*it);
  }

  int remaining_bound(std::size_t from) const {
    std::vector<int> fdeg(n_, 0);
    int feasible_count = 0;
    for (std::size_t j = from; j < edges_.size(); ++j) {
      if (!feasible(edges_[j])) continue;
      ++feasible_count;
      ++fdeg[edges_[j].first];
      ++fdeg[edges_[j].second];
    }
    if (feasible_count == 0) return 0;
    int capacity = 0;
    for (int v = 0; v < n_; ++v) capacity += std::min(2 - deg_[v], fdeg[v]);

    std::vector<int> uncovered = fdeg;
    std::vector<char> covered_edge(edges_.size(), 0);
    int cover_bound = 0;
    int left = feasible_count;
    while (left > 0) {
      const int v = static_cast<int>(std::max_element(uncovered.begin(), uncovered.end()) -
                                     uncovered.begin());
      cover_bound += std::min(2 - deg_[v], fdeg[v]);
      for (std::size_t j = from; j < edges_.size(); ++j) {
        const auto& e = edges_[j];
        if (covered_edge[j] || (e.first != v && e.second != v) || !feasible(e)) continue;
        covered_edge[j] = 1;
        --uncovered[e.first];
        --uncovered[e.second];
        --left;
      }
    }
    return std::min({feasible_count, capacity / 2, cover_bound,
                     n_ - 1 - static_cast<int>(current_.size())});
  }

  void recurse(std::size_t i) {
    if (static_cast<int>(best_.size()) >= target_) return;
    if (current_.size() > best_.size()) best_ = current_;
    if (i == edges_.size()) return;
    if (static_cast<int>(current_.size()) + remaining_bound(i) <= static_cast<int>(best_.size()))
      return;
    const Edge e = edges_[i];
    if (feasible(e)) {
      include(e);
      recurse(i + 1);
      undo(e);
    }
    recurse(i + 1);
  }

  int n_;
  EdgeList edges_;
  int target_;
  std::vector<int> deg_;
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<std::pair<int, int>> history_;
  EdgeList current_;
  EdgeList best_;
};

EdgeList linear_forest_search(const Graph& g, int target) {
  // A linear forest uses at most 2|N| vertices of a twin class with neighborhood N.
  auto reduced = reduce_false_twins(g, [](int, int nbhd) { return 2 * nbhd; });
  return lift(LinearForestSearch(reduced.graph, target).run(), reduced.original);
}

// ---- matchings: branch on the first vertex that can still be matched ----

class MatchingSearch {
 public:
  MatchingSearch(const Graph& g, int target)
      : g_(g), n_(g.order()), target_(target), blocked_(n_, 0) {}

  EdgeList run() {
    for (auto [u, v] : g_.edges())
      if (!blocked_[u] && !blocked_[v]) {
        blocked_[u] = blocked_[v] = 1;
        best_.emplace_back(u, v);
      }
    std::fill(blocked_.begin(), blocked_.end(), 0);
    if (static_cast<int>(best_.size()) < target_) recurse();
    return best_;
  }

 private:
  bool open(Vertex v) const { return !blocked_[v]; }

  int open_degree(Vertex v) const {
    int d = 0;
    for (Vertex w : g_.neighbors(v)) d += open(w) ? 1 : 0;
    return d;
  }

  int remaining_bound() const {
    std::vector<int> odeg(n_, 0);
    int live = 0;
    for (Vertex v = 0; v < n_; ++v)
      if (open(v)) {
        odeg[v] = open_degree(v);
        live += odeg[v] > 0 ? 1 : 0;
      }
    // Greedy vertex cover of the open subgraph; its size bounds any matching there.
    std::vector<char> removed(n_, 0);
    int cover = 0;
    for (;;) {
      const int v = static_cast<int>(std::max_element(odeg.begin(), odeg.end()) - odeg.begin());
      if (odeg[v] == 0) break;
      ++cover;
      removed[v] = 1;
      odeg[v] = 0;
      for (Vertex w : g_.neighbors(v))
        if (open(w) && !removed[w]) --odeg[w];
    }
    return std::min(live / 2, cover);
  }

  void recurse() {
    if (static_cast<int>(best_.size()) >= target_) return;
    if (current_.size() > best_.size()) best_ = current_;
    Vertex pivot = -1;
    for (Vertex v = 0; v < n_ && pivot < 0; ++v)
      if (open(v) && open_degree(v) > 0) pivot = v;
    if (pivot < 0) return;
    if (static_cast<int>(current_.size()) + remaining_bound() <= static_cast<int>(best_.size()))
      return;
    blocked_[pivot] = 1;
    for (Vertex w : g_.neighbors(pivot)) {
      if (!open(w)) continue;
      blocked_[w] = 1;
      current_.emplace_back(pivot, w);
      recurse();
      current_.pop_back();
      blocked_[w] = 0;
      if (static_cast<int>(best_.size()) >= target_) break;
    }
    // pivot stays unmatched
    recurse();
    blocked_[pivot] = 0;
  }

  const Graph& g_;
  int n_;
  int target_;
  std::vector<char> blocked_;
  EdgeList current_;
  EdgeList best_;
};

EdgeList matching_search(const Graph& g, int target) {
  // At most |N| vertices of a twin class can be matched into N.
  auto reduced = reduce_false_twins(g, [](int, int nbhd) { return nbhd; });
  return lift(MatchingSearch(reduced.graph, target).run(), reduced.original);
}

}  // namespace

VertexSet max_clique(const Graph& g) { return clique_search(g, INT_MAX); }

int clique_number(const Graph& g) { return static_cast<int>(max_clique(g).size()); }

bool contains_clique(const Graph& g, int q) {
  if (q < 0) throw std::invalid_argument("clique size must be non-negative");
  if (q == 0) return true;
  return find_clique(g, q).has_value();
}

std::optional<VertexSet> find_clique(const Graph& g, int q) {
  if (q <= 0) return VertexSet{};
  auto c = clique_search(g, q);
  if (static_cast<int>(c.size()) < q) return std::nullopt;
  c.resize(q);
  return c;
}

EdgeList maximum_linear_forest(const Graph& g) { return linear_forest_search(g, INT_MAX); }

int max_linear_forest(const Graph& g) { return static_cast<int>(maximum_linear_forest(g).size()); }

std::optional<EdgeList> find_linear_forest(const Graph& g, int edges) {
  if (edges <= 0) return EdgeList{};
  auto f = linear_forest_search(g, edges);
  if (static_cast<int>(f.size()) < edges) return std::nullopt;
  f.resize(edges);
  return f;
}

EdgeList maximum_matching(const Graph& g) { return matching_search(g, INT_MAX); }

int max_matching(const Graph& g) { return static_cast<int>(maximum_matching(g).size()); }

std::optional<EdgeList> find_matching(const Graph& g, int edges) {
  if (edges <= 0) return EdgeList{};
  auto m = matching_search(g, edges);
  if (static_cast<int>(m.size()) < edges) return std::nullopt;
  m.resize(edges);
  return m;
}

FreenessResult is_free(const Graph& g, const ForbiddenFamily& fam) {
  fam.validate();
  if (auto c = find_clique(g, fam.k + 1)) return {false, {Witness::Kind::clique, *c, {}}};
  if (fam.include_linear_forest) {
    if (auto f = find_linear_forest(g, fam.s)) {
      VertexSet touched;
      for (auto [u, v] : *f) {
        touched.push_back(u);
        touched.push_back(v);
      }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      return {false, {Witness::Kind::linear_forest, touched, *f}};
    }
  }
  if (fam.include_matching) {
    if (auto m = find_matching(g, fam.matching_size())) {
      VertexSet touched;
      for (auto [u, v] : *m) {
        touched.push_back(u);
        touched.push_back(v);
      }
      std::sort(touched.begin(), touched.end());
      return {false, {Witness::Kind::matching, touched, *m}};
    }
  }
  return {};
}

}  // namespace spex
