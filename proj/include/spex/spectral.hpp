#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::int64_t kDefaultIterationCap = 1'000'000;

/// Largest adjacency eigenvalue with a Collatz-Wielandt bracket.
///
/// `x` is the Perron vector of the component attaining rho (zero elsewhere),
/// normalized to unit Euclidean length. With r_i = (Ax)_i / x_i on that
/// support, lower = min r_i and upper = max r_i, so the residual satisfies
/// |(Ax)_i - rho x_i| <= (upper - lower) * x_i <= (upper - lower) * x_z.
struct SpectralResult {
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> x;
  /// Smallest index among the maximal entries of x.
  Vertex z = 0;
  std::int64_t iterations = 0;
  bool connected = true;
};

/// Spectral radius with a bracket only; what the quotient path produces.
struct RadiusBracket {
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(double lower, double upper, std::int64_t iterations);
  double lower;
  double upper;
  std::int64_t iterations;
};

struct SpectralOptions {
  double tolerance = kDefaultTolerance;
  std::int64_t max_iterations = kDefaultIterationCap;
};

/// Shifted power iteration on A + I from the all-ones vector, per component.
/// Throws std::invalid_argument on the empty graph and ConvergenceError when
/// the bracket does not close within the iteration cap.
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& options);
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTolerance);

/// Vertex block of an equitable partition. Blocks are independent sets or
/// cliques, and two distinct blocks are either completely joined or not
/// adjacent at all.
struct QuotientBlock {
  enum class Kind { independent, clique };
  int size = 0;
  Kind kind = Kind::independent;

  int internal_degree() const { return kind == Kind::clique ? size - 1 : 0; }
};

class EquitableQuotient {
 public:
  EquitableQuotient() = default;

  /// Appends a block; returns its index.
  int add_block(int size, QuotientBlock::Kind kind);
  void join_blocks(int a, int b);
  /// Appends a block joined to every existing block.
  int add_joined_block(int size, QuotientBlock::Kind kind);

  static EquitableQuotient from_partition(const PartitionSpec& spec);

  std::span<const QuotientBlock> blocks() const { return blocks_; }
  bool joined(int a, int b) const;
  int order() const;
  /// Blocks are laid out consecutively in insertion order.
  Graph realize() const;

 private:
  std::vector<QuotientBlock> blocks_;
  std::vector<std::vector<char>> joined_;
};

/// Spectral radius from the quotient matrix. Cost depends only on the number
/// of blocks, not on their sizes. Throws std::invalid_argument when every
/// block is empty.
RadiusBracket quotient_radius(const EquitableQuotient& quotient, double tol = kDefaultTolerance);
RadiusBracket quotient_radius(const PartitionSpec& spec, double tol = kDefaultTolerance);

/// First-order change of the Rayleigh quotient x^T A x when `removed` edges
/// are deleted and `added` edges inserted. A positive value certifies that
/// the rewired graph has a strictly larger spectral radius.
double rayleigh_delta(const Graph& g, std::span<const double> x, const EdgeList& removed,
                      const EdgeList& added);

}  // namespace spex
