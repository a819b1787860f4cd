#pragma once

#include <optional>
#include <string_view>

#include "spex/graph.hpp"

namespace spex {

/// Forbidden family {K_{k+1}, L_s} and its matching variant {K_{k+1}, M_{s+1}}.
///
/// `include_linear_forest` forbids every linear forest with s edges;
/// `include_matching` forbids a matching with s + 1 edges. The two factories
/// cover the families that actually occur; setting both flags forbids all
/// three structures.
struct ForbiddenFamily {
  int k = 2;
  int s = 2;
  bool include_linear_forest = true;
  bool include_matching = false;

  static ForbiddenFamily linear_forest(int k, int s);
  static ForbiddenFamily matching(int k, int s);

  /// floor((s - 1) / 2)
  int h() const noexcept { return (s - 1) / 2; }
  /// 1 / (36 (h + 1)^3)
  double alpha() const noexcept;
  int matching_size() const noexcept { return s + 1; }

  /// Throws std::invalid_argument unless k >= 2 and s >= 2.
  void validate() const;
};

VertexSet max_clique(const Graph& g);
int clique_number(const Graph& g);
bool contains_clique(const Graph& g, int q);
/// A clique of exactly q vertices, if one exists.
std::optional<VertexSet> find_clique(const Graph& g, int q);

/// Largest subgraph whose components are paths, as an edge list.
EdgeList maximum_linear_forest(const Graph& g);
int max_linear_forest(const Graph& g);
/// A linear forest with exactly `edges` edges, if one exists.
std::optional<EdgeList> find_linear_forest(const Graph& g, int edges);

EdgeList maximum_matching(const Graph& g);
int max_matching(const Graph& g);
std::optional<EdgeList> find_matching(const Graph& g, int edges);

struct Witness {
  enum class Kind { none, clique, linear_forest, matching };
  Kind kind = Kind::none;
  VertexSet vertices;
  EdgeList edges;
};

std::string_view to_string(Witness::Kind kind);

struct FreenessResult {
  bool free = true;
  Witness witness;
};

FreenessResult is_free(const Graph& g, const ForbiddenFamily& fam);

}  // namespace spex
