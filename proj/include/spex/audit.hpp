#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spex/forbidden.hpp"
#include "spex/graph.hpp"
#include "spex/spectral.hpp"

namespace spex {

/// One structural inequality evaluated on a concrete graph. `margin` is
/// signed so that a positive value means the inequality holds strictly; for
/// the equality check on |R| it is |R| - h.
struct LemmaCheck {
  std::string id;
  std::string statement;
  bool holds = false;
  double margin = 0.0;
};

/// Perron-entry threshold sets of a graph, relative to the maximal entry x_z:
///   R'  = { v : x_v >  alpha x_z }
///   R'' = { v : x_v > 4 alpha x_z }
///   R   = { v : x_v >= x_z / (2(h+1)) }
///   W   = { v : R is contained in N(v) }
/// The inequality checks are diagnostics: they are only guaranteed for
/// extremal graphs of order at least `order_threshold`, and on smaller graphs
/// a failing check is an expected observation, not an error.
struct StructureReport {
  ForbiddenFamily fam;
  int n = 0;
  double rho = 0.0;
  Vertex z = 0;
  std::vector<double> x;
  std::vector<double> ratios;
  VertexSet r_prime;
  VertexSet r_double_prime;
  VertexSet r;
  VertexSet w;
  bool connected = true;
  /// Set when the graph is disconnected; the vector then lives on one component.
  bool per_component = false;
  double order_threshold = 0.0;
  std::vector<LemmaCheck> checks;
};

StructureReport structure_sets(const Graph& g, const ForbiddenFamily& fam,
                               double tol = kDefaultTolerance);

/// e(A, B): ordered pairs (a, b) with a in A, b in B, ab an edge. An edge
/// inside A and B is counted twice.
std::int64_t pair_edge_count(const Graph& g, const VertexSet& a, const VertexSet& b);
/// Edges of the subgraph induced by S.
std::int64_t induced_edge_count(const Graph& g, const VertexSet& s);

/// Every term of the edge-count decompositions for one (A, B) pair.
struct EdgeIdentityTerms {
  std::int64_t e_ab = 0;             // e(A, B)
  std::int64_t e_a_b_minus_a = 0;    // e(A, B \ A)
  std::int64_t e_a_a_cap_b = 0;      // e(A, A n B)
  std::int64_t induced_cap = 0;      // e(G[A n B])
  std::int64_t e_a_minus_b_cap = 0;  // e(A \ B, A n B)
  std::int64_t induced_cup = 0;      // e(G[A u B])
  std::int64_t total_edges = 0;      // e(G)
  std::int64_t size_a = 0;
  std::int64_t size_b = 0;

  bool split_holds() const;       // e(A,B) = e(A,B\A) + e(A,AnB)
  bool refined_split_holds() const;  // e(A,B) = e(A,B\A) + 2e(G[AnB]) + e(A\B,AnB)
  bool union_bound_holds() const;    // e(A,B) <= e(G[AuB]) + e(G[AnB]) <= 2e(G)
  bool product_bound_holds() const;  // e(A,B) <= |A||B|
};

EdgeIdentityTerms edge_identity_terms(const Graph& g, const VertexSet& a, const VertexSet& b);

struct IntersectionBound {
  std::int64_t bound = 0;   // sum |S_i| - (m - 1) |union S_i|
  std::int64_t actual = 0;  // |intersection S_i|
};

/// Throws std::invalid_argument on an empty list of sets.
IntersectionBound intersection_lower_bound(const std::vector<std::vector<int>>& sets);

}  // namespace spex
