#include "spex/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace spex {

namespace {

std::vector<char> membership(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex set member out of range");
    in[v] = 1;
  }
  return in;
}

VertexSet members(const std::vector<char>& in) {
  VertexSet out;
  for (Vertex v = 0; v < static_cast<Vertex>(in.size()); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

std::int64_t pair_count(const Graph& g, const std::vector<char>& a, const std::vector<char>& b) {
  std::int64_t count = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!a[u]) continue;
    for (Vertex v : g.neighbors(u)) count += b[v] ? 1 : 0;
  }
  return count;
}

std::int64_t induced_count(const Graph& g, const std::vector<char>& s) {
  return pair_count(g, s, s) / 2;
}

// Minimum of f over the set, or +inf when empty.
template <typename F>
double min_over(const VertexSet& set, F f) {
  double m = std::numeric_limits<double>::infinity();
  for (Vertex v : set) m = std::min(m, f(v));
  return m;
}

}  // namespace

StructureReport structure_sets(const Graph& g, const ForbiddenFamily& fam, double tol) {
  fam.validate();
  const auto spectral = spectral_radius(g, tol);
  StructureReport rep;
  rep.fam = fam;
  rep.n = g.order();
  rep.rho = spectral.rho;
  rep.z = spectral.z;
  rep.x = spectral.x;
  rep.connected = spectral.connected;
  rep.per_component = !spectral.connected;

  const int h = fam.h();
  const double alpha = fam.alpha();
  const double xz = spectral.x[spectral.z];
  const double r_threshold = 1.0 / (2.0 * (h + 1));
  rep.ratios.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const double xv = spectral.x[v];
    rep.ratios[v] = xv / xz;
    if (xv > alpha * xz) rep.r_prime.push_back(v);
    if (xv > 4.0 * alpha * xz) rep.r_double_prime.push_back(v);
    if (xv >= r_threshold * xz) rep.r.push_back(v);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    const bool covers =
        std::all_of(rep.r.begin(), rep.r.end(), [&](Vertex u) { return g.adjacent(v, u); });
    if (covers) rep.w.push_back(v);
  }

  const double n = g.order();
  const double half_block = std::floor((fam.s + 1) / 2.0);
  rep.order_threshold = 36288.0 * std::pow(half_block, 8);

  auto add = [&](std::string id, std::string statement, double margin, bool holds) {
    rep.checks.push_back({std::move(id), std::move(statement), holds, margin});
  };
  auto deg = [&](Vertex v) { return static_cast<double>(g.degree(v)); };

  add("connected", "G is connected", rep.connected ? 1.0 : -1.0, rep.connected);
  {
    const double bound = h <= n ? std::sqrt(h * (n - h)) : 0.0;
    const double m = rep.rho - bound;
    add("spectral-lower-bound", "rho >= sqrt(h (n - h))", m, m >= -spectral.upper + spectral.lower - 1e-12);
  }
  {
    const double m = 2.0 * std::sqrt(h * n) - static_cast<double>(rep.r_prime.size());
    add("r-prime-size", "|R'| <= 2 sqrt(h n)", m, m >= 0.0);
  }
  {
    const double m = min_over(rep.r_double_prime, [&](Vertex v) { return deg(v) - alpha * n / 3.0; });
    add("r-double-prime-degree", "d(v) > alpha n / 3 for v in R''", m, m > 0.0);
  }
  {
    const double m = 3.0 * (h + 1) / alpha - static_cast<double>(rep.r_double_prime.size());
    add("r-double-prime-size", "|R''| < 3 (h + 1) / alpha", m, m > 0.0);
  }
  {
    const double m = min_over(rep.r, [&](Vertex v) {
      return deg(v) - (rep.ratios[v] - 1.0 / (6.0 * (h + 1))) * n;
    });
    add("ratio-degree", "d(v) > (m_v - 1 / (6 (h + 1))) n for m_v in [1/(2(h+1)), 1]", m,
        m > 0.0);
  }
  {
    const double m =
        min_over(rep.r, [&](Vertex v) { return deg(v) - (1.0 - 5.0 / (6.0 * (h + 1))) * n; });
    add("r-degree", "d(v) > (1 - 5 / (6 (h + 1))) n for v in R", m, m > 0.0);
  }
  {
    const double m = static_cast<double>(rep.r.size()) - h;
    add("r-size", "|R| = h", m, m == 0.0);
  }
  return rep;
}

std::int64_t pair_edge_count(const Graph& g, const VertexSet& a, const VertexSet& b) {
  return pair_count(g, membership(g, a), membership(g, b));
}

std::int64_t induced_edge_count(const Graph& g, const VertexSet& s) {
  return induced_count(g, membership(g, s));
}

EdgeIdentityTerms edge_identity_terms(const Graph& g, const VertexSet& a, const VertexSet& b) {
  const auto in_a = membership(g, a);
  const auto in_b = membership(g, b);
  std::vector<char> b_minus_a(g.order()), cap(g.order()), cup(g.order()), a_minus_b(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    b_minus_a[v] = in_b[v] && !in_a[v];
    cap[v] = in_a[v] && in_b[v];
    cup[v] = in_a[v] || in_b[v];
    a_minus_b[v] = in_a[v] && !in_b[v];
  }
  EdgeIdentityTerms t;
  t.e_ab = pair_count(g, in_a, in_b);
  t.e_a_b_minus_a = pair_count(g, in_a, b_minus_a);
  t.e_a_a_cap_b = pair_count(g, in_a, cap);
  t.induced_cap = induced_count(g, cap);
  t.e_a_minus_b_cap = pair_count(g, a_minus_b, cap);
  t.induced_cup = induced_count(g, cup);
  t.total_edges = g.edge_count();
  t.size_a = static_cast<std::int64_t>(members(in_a).size());
  t.size_b = static_cast<std::int64_t>(members(in_b).size());
  return t;
}

bool EdgeIdentityTerms::split_holds() const { return e_ab == e_a_b_minus_a + e_a_a_cap_b; }

bool EdgeIdentityTerms::refined_split_holds() const {
  return e_ab == e_a_b_minus_a + 2 * induced_cap + e_a_minus_b_cap;
}

bool EdgeIdentityTerms::union_bound_holds() const {
  return e_ab <= induced_cup + induced_cap && induced_cup + induced_cap <= 2 * total_edges;
}

bool EdgeIdentityTerms::product_bound_holds() const { return e_ab <= size_a * size_b; }

IntersectionBound intersection_lower_bound(const std::vector<std::vector<int>>& sets) {
  if (sets.empty()) throw std::invalid_argument("intersection bound needs at least one set");
  std::set<int> all;
  std::int64_t total = 0;
  std::vector<std::set<int>> as_sets;
  for (const auto& s : sets) {
    as_sets.emplace_back(s.begin(), s.end());
    total += static_cast<std::int64_t>(as_sets.back().size());
    all.insert(s.begin(), s.end());
  }
  std::int64_t common = 0;
  for (int v : as_sets.front())
    common += std::all_of(as_sets.begin(), as_sets.end(), [&](const auto& s) { return s.contains(v); })
                  ? 1
                  : 0;
  const auto m = static_cast<std::int64_t>(sets.size());
  return {total - (m - 1) * static_cast<std::int64_t>(all.size()), common};
}

}  // namespace spex
