#include "spex/zykov.hpp"

#include <algorithm>
#include <string>

namespace spex {

std::string_view to_string(ZykovRejection r) {
  switch (r) {
    case ZykovRejection::same_vertex: return "same-vertex";
    case ZykovRejection::adjacent: return "adjacent";
    case ZykovRejection::equal_neighborhoods: return "equal-neighborhoods";
    case ZykovRejection::weight_condition: return "weight-condition";
  }
  return "";
}

ZykovPreconditionError::ZykovPreconditionError(ZykovRejection r)
    : std::invalid_argument("Zykov step rejected: " + std::string(to_string(r))), reason(r) {}

std::string_view to_string(ClimbStep::Kind kind) {
  return kind == ClimbStep::Kind::zykov ? "zykov" : "add-edge";
}

namespace {

double weight(const Graph& g, Vertex v, std::span<const double> x) {
  double s = 0.0;
  for (Vertex w : g.neighbors(v)) s += x[w];
  return s;
}

}  // namespace

std::optional<ZykovRejection> zykov_rejection(const Graph& g, Vertex u, Vertex v,
                                              std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.order())
    throw std::invalid_argument("vector length does not match graph order");
  if (u == v) return ZykovRejection::same_vertex;
  if (g.adjacent(u, v)) return ZykovRejection::adjacent;
  if (std::ranges::equal(g.row(u), g.row(v))) return ZykovRejection::equal_neighborhoods;
  if (weight(g, v, x) < weight(g, u, x)) return ZykovRejection::weight_condition;
  return std::nullopt;
}

Graph zykov_step(const Graph& g, Vertex u, Vertex v, std::span<const double> x) {
  if (auto r = zykov_rejection(g, u, v, x)) throw ZykovPreconditionError(*r);
  GraphBuilder b(g);
  b.isolate(u);
  for (Vertex w : g.neighbors(v)) b.add_edge(u, w);
  return std::move(b).build();
}

namespace {

struct Move {
  ClimbStep::Kind kind;
  Vertex u;
  Vertex v;
  double delta;
};

}  // namespace

ClimbResult zykov_climb(const Graph& g, const ForbiddenFamily& fam, const ClimbOptions& options) {
  if (!is_free(g, fam).free) throw std::invalid_argument("climb must start from a free graph");
  ClimbResult result;
  result.graph = g;
  if (g.order() == 0) return result;

  auto current = spectral_radius(g, options.tolerance);
  result.rho_start = current.rho;
  for (int step = 0; step < options.max_steps; ++step) {
    const Graph& cur = result.graph;
    std::vector<Move> moves;
    for (Vertex u = 0; u < cur.order(); ++u) {
      for (Vertex v = 0; v < cur.order(); ++v) {
        if (u == v) continue;
        if (u < v && !cur.adjacent(u, v))
          moves.push_back({ClimbStep::Kind::add_edge, u, v,
                           2.0 * current.x[u] * current.x[v]});
        if (zykov_rejection(cur, u, v, current.x)) continue;
        EdgeList removed, added;
        for (Vertex w : cur.neighbors(u))
          if (!cur.adjacent(v, w)) removed.emplace_back(u, w);
        for (Vertex w : cur.neighbors(v))
          if (!cur.adjacent(u, w)) added.emplace_back(u, w);
        moves.push_back({ClimbStep::Kind::zykov, u, v,
                         rayleigh_delta(cur, current.x, removed, added)});
      }
    }
    std::stable_sort(moves.begin(), moves.end(),
                     [](const Move& a, const Move& b) { return a.delta > b.delta; });

    bool improved = false;
    for (const auto& m : moves) {
      Graph next = m.kind == ClimbStep::Kind::zykov
                       ? zykov_step(cur, m.u, m.v, current.x)
                       : std::move(GraphBuilder(cur).add_edge(m.u, m.v)).build();
      if (!is_free(next, fam).free) continue;
      auto solved = spectral_radius(next, options.tolerance);
      if (solved.lower <= current.upper) continue;
      result.trace.push_back({m.kind, m.u, m.v, m.delta, current.rho, solved.rho});
      result.graph = std::move(next);
      current = std::move(solved);
      improved = true;
      break;
    }
    if (!improved) break;
  }
  result.rho_end = current.rho;
  return result;
}

BalanceResult balance_step(const PartitionSpec& spec) {
  spec.validate();
  if (spec.parts.size() < 2) return {spec, true};
  auto hi = std::max_element(spec.parts.begin(), spec.parts.end());
  auto lo = std::min_element(spec.parts.begin(), spec.parts.end());
  if (*hi - *lo < 2) return {spec, true};
  PartitionSpec out = spec;
  --out.parts[hi - spec.parts.begin()];
  ++out.parts[lo - spec.parts.begin()];
  return {out, false};
}

}  // namespace spex
