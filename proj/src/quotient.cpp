#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spex/spectral.hpp"

namespace spex {

int EquitableQuotient::add_block(int size, QuotientBlock::Kind kind) {
  if (size < 0) throw std::invalid_argument("block size must be non-negative");
  blocks_.push_back({size, kind});
  for (auto& row : joined_) row.push_back(0);
  joined_.emplace_back(blocks_.size(), 0);
  return static_cast<int>(blocks_.size()) - 1;
}

void EquitableQuotient::join_blocks(int a, int b) {
  if (a == b) throw std::invalid_argument("a block cannot be joined to itself");
  joined_.at(a).at(b) = 1;
  joined_.at(b).at(a) = 1;
}

int EquitableQuotient::add_joined_block(int size, QuotientBlock::Kind kind) {
  const int id = add_block(size, kind);
  for (int i = 0; i < id; ++i) join_blocks(i, id);
  return id;
}

EquitableQuotient EquitableQuotient::from_partition(const PartitionSpec& spec) {
  spec.validate();
  EquitableQuotient q;
  for (int b : spec.parts) q.add_joined_block(b, QuotientBlock::Kind::independent);
  if (spec.remainder > 0) q.add_joined_block(spec.remainder, QuotientBlock::Kind::independent);
  return q;
}

bool EquitableQuotient::joined(int a, int b) const { return joined_.at(a).at(b) != 0; }

int EquitableQuotient::order() const {
  int n = 0;
  for (const auto& b : blocks_) n += b.size;
  return n;
}

Graph EquitableQuotient::realize() const {
  GraphBuilder g(order());
  std::vector<int> start(blocks_.size() + 1, 0);
  for (std::size_t i = 0; i < blocks_.size(); ++i) start[i + 1] = start[i] + blocks_[i].size;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].kind == QuotientBlock::Kind::clique)
      for (int u = start[i]; u < start[i + 1]; ++u)
        for (int v = u + 1; v < start[i + 1]; ++v) g.add_edge(u, v);
    for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
      if (!joined_[i][j]) continue;
      for (int u = start[i]; u < start[i + 1]; ++u)
        for (int v = start[j]; v < start[j + 1]; ++v) g.add_edge(u, v);
    }
  }
  return std::move(g).build();
}

namespace {

// The quotient B_ij = [joined] |B_j| (off diagonal), B_ii = internal degree is
// similar to the symmetric S_ij = [joined] sqrt(|B_i||B_j|). The number of
// eigenvalues of S above t equals the number of negative pivots of t I - S
// (Sylvester inertia), which drives a bisection on the characteristic
// polynomial's largest root.
int eigenvalues_above(const std::vector<std::vector<double>>& sym, double t) {
  const std::size_t m = sym.size();
  std::vector<std::vector<double>> a(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a[i][j] = (i == j ? t : 0.0) - sym[i][j];
  int negative = 0;
  for (std::size_t p = 0; p < m; ++p) {
    double pivot = a[p][p];
    if (pivot == 0.0) pivot = 1e-300;
    if (pivot < 0.0) ++negative;
    for (std::size_t i = p + 1; i < m; ++i) {
      const double f = a[i][p] / pivot;
      if (f == 0.0) continue;
      for (std::size_t j = p + 1; j < m; ++j) a[i][j] -= f * a[p][j];
    }
  }
  return negative;
}

}  // namespace

RadiusBracket quotient_radius(const EquitableQuotient& quotient, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  std::vector<int> live;
  for (int i = 0; i < static_cast<int>(quotient.blocks().size()); ++i)
    if (quotient.blocks()[i].size > 0) live.push_back(i);
  if (live.empty()) throw std::invalid_argument("quotient has no vertices");

  const std::size_t m = live.size();
  std::vector<std::vector<double>> sym(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    const auto& bi = quotient.blocks()[live[i]];
    sym[i][i] = bi.internal_degree();
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || !quotient.joined(live[i], live[j])) continue;
      const auto& bj = quotient.blocks()[live[j]];
      sym[i][j] = std::sqrt(static_cast<double>(bi.size) * static_cast<double>(bj.size));
    }
  }

  double lo = 0.0;
  double hi = static_cast<double>(quotient.order());
  if (eigenvalues_above(sym, 0.0) == 0) return {0.0, 0.0, 0.0};
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (eigenvalues_above(sym, mid) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return {0.5 * (lo + hi), lo, hi};
}

RadiusBracket quotient_radius(const PartitionSpec& spec, double tol) {
  if (spec.order() == 0) throw std::invalid_argument("partition has no vertices");
  return quotient_radius(EquitableQuotient::from_partition(spec), tol);
}

}  // namespace spex
