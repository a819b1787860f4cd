#pragma once

#include <cstdint>
#include <string_view>

#include "spex/graph.hpp"
#include "spex/spectral.hpp"

namespace spex {

enum class CandidateCase {
  single_edge,  // s = 2
  odd_small,    // s odd, s <= 2k - 1
  odd_large,    // s odd, s >= 2k + 1
  even_small,   // s even, s <= 2k - 2
  even_large,   // s even, s >= 2k
  matching,     // {K_{k+1}, M_{s+1}}
};

std::string_view case_tag(CandidateCase c);

/// An extremal candidate together with the equitable partition it is built
/// from. Vertex layout: hub blocks first, the independent block last.
struct Candidate {
  Graph graph;
  CandidateCase kind;
  EquitableQuotient quotient;
};

/// Candidate maximizer of the spectral radius over {K_{k+1}, L_s}-free graphs
/// of order n. Requires k >= 2, s >= 2 and n >= s + 2.
Candidate extremal_candidate(int n, int k, int s);

/// T(s, k-1) joined with an independent set of n - s vertices. Requires
/// k >= 2, s >= 1 and n >= 4s^2 + 9s.
Candidate matching_candidate(int n, int k, int s);

struct TuranNumberBreakdown {
  enum class Shape { clique_plus_isolated, hub_join, hub_join_plus_edge };
  std::int64_t n = 0;
  std::int64_t s = 0;
  std::int64_t h = 0;
  std::int64_t clique_term = 0;
  std::int64_t star_term = 0;
  /// 0 for odd s, 1 for even s.
  int c = 0;
  std::int64_t value = 0;
  Shape extremal_shape = Shape::hub_join;
};

std::string_view to_string(TuranNumberBreakdown::Shape shape);

/// Maximum edge count of an L_s-free graph on n vertices, 1 <= s <= n - 1.
/// When both terms tie the hub shape is reported.
TuranNumberBreakdown linear_forest_turan_number(std::int64_t n, std::int64_t s);

/// Whether the Turan number is at most floor((s-1)/2) n. Requires
/// 3 <= s <= n - 1 and n >= s + 2.
bool edge_upper_bound_check(std::int64_t n, std::int64_t s);

}  // namespace spex
