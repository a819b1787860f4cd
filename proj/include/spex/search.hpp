#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spex/forbidden.hpp"
#include "spex/graph.hpp"
#include "spex/spectral.hpp"

namespace spex {

inline constexpr int kDefaultEnumerationCap = 8;
/// Graphs whose spectral radius is within this of the best are co-reported.
inline constexpr double kArgmaxTieTolerance = 1e-9;

/// The permutation minimizing the graph6 bit string (upper triangle, column
/// by column) over all relabellings; equal for isomorphic graphs.
Graph canonical_graph(const Graph& g);
std::string canonical_form(const Graph& g);

/// Calls `visit` once for every labeled F-free graph on n vertices and
/// returns how many there were. Vertices are added one at a time; the
/// neighbors of a new vertex among earlier ones are chosen as an ascending
/// bitmask, and a prefix that is not free is never extended.
/// Throws std::invalid_argument when n exceeds `cap`.
std::int64_t enumerate_free_graphs(int n, const ForbiddenFamily& fam,
                                   const std::function<void(const Graph&)>& visit,
                                   int cap = kDefaultEnumerationCap);

/// One canonical representative per isomorphism class, sorted by canonical form.
std::vector<Graph> enumerate_free_graphs_up_to_isomorphism(int n, const ForbiddenFamily& fam,
                                                           int cap = kDefaultEnumerationCap);

enum class Verdict { matches, candidate_suboptimal, candidate_optimal_tied, not_applicable };

std::string_view to_string(Verdict v);

struct SearchOptions {
  int cap = kDefaultEnumerationCap;
  int workers = 1;
  bool count_unlabeled = false;
  double tolerance = kDefaultTolerance;
};

struct SearchReport {
  int n = 0;
  ForbiddenFamily fam;
  std::int64_t count_free = 0;
  std::optional<std::int64_t> count_unlabeled;
  double best_rho = 0.0;
  /// Canonical graph6 strings of every maximizer, sorted.
  std::vector<std::string> argmax;
  bool argmax_connected = true;
  std::optional<double> candidate_rho;
  std::optional<std::string> candidate;
  std::optional<std::string> candidate_case;
  Verdict verdict = Verdict::not_applicable;
  double wall_time_s = 0.0;
};

/// Exhaustive search for the F-free graphs of order n with the largest
/// spectral radius, compared against the extremal candidate when that is
/// defined (n >= s + 2 for the linear-forest family). The search tree is
/// split by the neighborhoods of the first few vertices; results are reduced
/// in branch order, so the report does not depend on the worker count.
SearchReport brute_force_extremal(int n, const ForbiddenFamily& fam,
                                  const SearchOptions& options = {});

}  // namespace spex
