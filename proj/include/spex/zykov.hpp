#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "spex/forbidden.hpp"
#include "spex/graph.hpp"
#include "spex/spectral.hpp"

namespace spex {

enum class ZykovRejection {
  same_vertex,
  adjacent,
  equal_neighborhoods,
  weight_condition,  // sum of x over N(v) is smaller than over N(u)
};

std::string_view to_string(ZykovRejection r);

class ZykovPreconditionError : public std::invalid_argument {
 public:
  explicit ZykovPreconditionError(ZykovRejection r);
  ZykovRejection reason;
};

/// The first unmet precondition of zykov_step, if any.
std::optional<ZykovRejection> zykov_rejection(const Graph& g, Vertex u, Vertex v,
                                              std::span<const double> x);

/// Z_{u,v}(G): u loses its edges and is joined to N(v) instead.
/// Throws ZykovPreconditionError when a precondition fails.
Graph zykov_step(const Graph& g, Vertex u, Vertex v, std::span<const double> x);

struct ClimbStep {
  enum class Kind { zykov, add_edge };
  Kind kind;
  Vertex u;
  Vertex v;
  double delta;
  double rho_before;
  double rho_after;
};

std::string_view to_string(ClimbStep::Kind kind);

struct ClimbOptions {
  double tolerance = 1e-12;
  int max_steps = 10'000;
};

struct ClimbResult {
  Graph graph;
  double rho_start = 0.0;
  double rho_end = 0.0;
  std::vector<ClimbStep> trace;
};

/// Local ascent over free graphs. Each round scores every admissible Zykov
/// move and every edge addition by its Rayleigh delta, then takes the best
/// candidate whose result is still free and whose radius, re-solved, beats
/// the current radius beyond both brackets. Stops when no candidate does.
/// Throws std::invalid_argument when the start graph is not free.
ClimbResult zykov_climb(const Graph& g, const ForbiddenFamily& fam, const ClimbOptions& options = {});

struct BalanceResult {
  PartitionSpec spec;
  /// True when no two parts differ by 2 or more; spec is then unchanged.
  bool balanced = false;
};

/// Moves one vertex from the first largest part to the first smallest part.
/// The remainder block is left untouched.
BalanceResult balance_step(const PartitionSpec& spec);

}  // namespace spex
