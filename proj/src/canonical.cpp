#include <cstdint>
#include <vector>

#include "spex/graph6.hpp"
#include "spex/search.hpp"

namespace spex {

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), used_(n_, 0) {}

  std::vector<Vertex> run() {
    order_.reserve(n_);
    column_.assign(n_, 0);
    best_column_.assign(n_, 0);
    descend(0, false);
    return best_order_;
  }

 private:
  // Position j's column holds bits (i, j) for i < j, most significant first.
  // `smaller` says the prefix so far is below the best prefix. Returns whether
  // the best was replaced; the replacement then shares this prefix.
  bool descend(int j, bool smaller) {
    if (j == n_) {
      if (!smaller && !best_order_.empty()) return false;
      best_order_ = order_;
      best_column_ = column_;
      return true;
    }
    bool updated = false;
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < j; ++i) col = (col << 1) | (g_.adjacent(order_[i], v) ? 1 : 0);
      bool now_smaller = smaller;
      if (!smaller && !best_order_.empty()) {
        if (col > best_column_[j]) continue;
        now_smaller = col < best_column_[j];
      }
      used_[v] = 1;
      order_.push_back(v);
      column_[j] = col;
      if (descend(j + 1, now_smaller)) {
        updated = true;
        smaller = false;
      }
      order_.pop_back();
      used_[v] = 0;
    }
    return updated;
  }

  const Graph& g_;
  int n_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
  std::vector<std::uint64_t> column_;
  std::vector<Vertex> best_order_;
  std::vector<std::uint64_t> best_column_;
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  if (g.order() > 64) throw std::invalid_argument("canonical form limited to 64 vertices");
  if (g.order() == 0) return g;
  const auto order = CanonicalSearch(g).run();
  std::vector<Vertex> perm(g.order());
  for (int pos = 0; pos < g.order(); ++pos) perm[order[pos]] = pos;
  return permute(g, perm);
}

std::string canonical_form(const Graph& g) { return g6_encode(canonical_graph(g)); }

}  // namespace spex
