#include "spex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace spex {

ConvergenceError::ConvergenceError(double lo, double hi, std::int64_t iters)
    : std::runtime_error("power iteration did not converge after " + std::to_string(iters) +
                         " iterations; best bracket [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]"),
      lower(lo),
      upper(hi),
      iterations(iters) {}

namespace {

struct ComponentSolve {
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> x;  // local to the component
  std::int64_t iterations = 0;
};

ComponentSolve solve_component(const std::vector<std::vector<int>>& adj,
                               const SpectralOptions& options) {
  const std::size_t m = adj.size();
  ComponentSolve out;
  if (m == 1) {
    out.x = {1.0};
    return out;
  }

  std::vector<double> x(m, 1.0 / std::sqrt(static_cast<double>(m)));
  std::vector<double> y(m);
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (std::int64_t it = 1; it <= options.max_iterations; ++it) {
    double lo_ratio = std::numeric_limits<double>::infinity();
    double hi_ratio = 0.0;
    double norm2 = 0.0;
    double quad = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0.0;
      for (int j : adj[i]) s += x[j];
      quad += s * x[i];
      y[i] = s + x[i];
      norm2 += y[i] * y[i];
      const double r = y[i] / x[i];
      lo_ratio = std::min(lo_ratio, r);
      hi_ratio = std::max(hi_ratio, r);
    }
    lo = std::max(lo, lo_ratio - 1.0);
    hi = std::min(hi, hi_ratio - 1.0);
    if (hi - lo <= options.tolerance) {
      double xx = 0.0;
      for (double v : x) xx += v * v;
      out.rho = std::clamp(quad / xx, lo, hi);
      out.lower = lo;
      out.upper = hi;
      const double scale = 1.0 / std::sqrt(xx);
      for (double& v : x) v *= scale;
      out.x = std::move(x);
      out.iterations = it;
      return out;
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < m; ++i) x[i] = y[i] * scale;
  }
  throw ConvergenceError(lo, hi, options.max_iterations);
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
  return spectral_radius(g, SpectralOptions{tol, kDefaultIterationCap});
}

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& options) {
  if (g.order() == 0) throw std::invalid_argument("spectral radius of the empty vertex set");
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");

  const auto comps = components(g);
  std::vector<int> local(g.order());
  SpectralResult result;
  result.connected = comps.size() == 1;
  result.x.assign(g.order(), 0.0);

  double best_lower = 0.0;
  double best_upper = 0.0;
  std::size_t best = 0;
  ComponentSolve best_solve;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& comp = comps[c];
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i])) adj[i].push_back(local[w]);
    auto solve = solve_component(adj, options);
    result.iterations += solve.iterations;
    best_lower = std::max(best_lower, solve.lower);
    best_upper = std::max(best_upper, solve.upper);
    if (c == 0 || solve.rho > best_solve.rho) {
      best = c;
      best_solve = std::move(solve);
    }
  }

  result.lower = best_lower;
  result.upper = best_upper;
  result.rho = std::clamp(best_solve.rho, best_lower, best_upper);
  const auto& comp = comps[best];
  for (std::size_t i = 0; i < comp.size(); ++i) result.x[comp[i]] = best_solve.x[i];

  const double xmax = *std::max_element(result.x.begin(), result.x.end());
  constexpr double kTieRelative = 1e-9;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (result.x[v] >= xmax * (1.0 - kTieRelative)) {
      result.z = v;
      break;
    }
  }
  return result;
}

double rayleigh_delta(const Graph& g, std::span<const double> x, const EdgeList& removed,
                      const EdgeList& added) {
  if (static_cast<int>(x.size()) != g.order())
    throw std::invalid_argument("vector length does not match graph order");
  auto key = [](Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; };
  std::set<Edge> removed_set;
  for (auto e : removed) {
    if (!g.adjacent(e.first, e.second))
      throw std::invalid_argument("removed pair is not an edge of the graph");
    removed_set.insert(key(e));
  }
  double delta = 0.0;
  for (auto e : added) {
    if (e.first == e.second) throw std::invalid_argument("added pair is a loop");
    if (removed_set.contains(key(e)))
      throw std::invalid_argument("edge appears in both removed and added lists");
    if (g.adjacent(e.first, e.second))
      throw std::invalid_argument("added pair is already an edge of the graph");
    delta += 2.0 * x[e.first] * x[e.second];
  }
  for (auto e : removed_set) delta -= 2.0 * x[e.first] * x[e.second];
  return delta;
}

}  // namespace spex
