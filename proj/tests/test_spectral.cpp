#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spex/constructions.hpp"
#include "spex/spectral.hpp"

using namespace spex;

namespace {

// Largest root of x^4 - 3x^2 + 1, the characteristic polynomial of P_4, by
// bisection on [1.5, 2] where it has a single sign change.
double p4_root() {
  auto p = [](double x) { return x * x * x * x - 3 * x * x + 1; };
  double lo = 1.5, hi = 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (p(lo) < 0) == (p(mid) < 0) ? lo = mid : hi = mid;
  }
  return 0.5 * (lo + hi);
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

void check_result_invariants(const Graph& g, const SpectralResult& r, double tol) {
  CHECK(r.lower <= r.rho);
  CHECK(r.rho <= r.upper);
  CHECK(r.upper - r.lower <= tol);
  double norm = 0.0, xmax = 0.0;
  for (double v : r.x) {
    norm += v * v;
    xmax = std::max(xmax, v);
  }
  CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.x[r.z] == doctest::Approx(xmax).epsilon(1e-9));
  for (Vertex v = 0; v < r.z; ++v) CHECK(r.x[v] < xmax * (1 - 1e-9));
  for (Vertex v = 0; v < g.order(); ++v) {
    double ax = 0.0;
    for (Vertex w : g.neighbors(v)) ax += r.x[w];
    CHECK(std::abs(ax - r.rho * r.x[v]) <= (r.upper - r.lower) * r.x[r.z] + 1e-12);
  }
}

}  // namespace

TEST_CASE("spectral radius of named graphs") {
  CHECK(spectral_radius(complete_graph(5)).rho == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(spectral_radius(complete_bipartite(2, 18)).rho == doctest::Approx(6.0).epsilon(1e-12));
  const double golden = p4_root();
  CHECK(golden == doctest::Approx(1.6180339887).epsilon(1e-10));
  CHECK(std::abs(spectral_radius(path_graph(4)).rho - golden) <= 1e-10);
  CHECK(spectral_radius(empty_graph(4)).rho == 0.0);
}

TEST_CASE("spectral radius rejects the order-zero graph") {
  CHECK_THROWS_AS(spectral_radius(empty_graph(0)), std::invalid_argument);
}

TEST_CASE("non-convergence is reported with its bracket") {
  SpectralOptions opts{1e-10, 3};
  try {
    (void)spectral_radius(path_graph(12), opts);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.lower <= e.upper);
    CHECK(e.iterations == 3);
    CHECK(e.lower <= oracle::dense_rho(path_graph(12)) + 1e-12);
    CHECK(e.upper >= oracle::dense_rho(path_graph(12)) - 1e-12);
  }
}

TEST_CASE("Perron vector positivity, normalization and residual") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng, 2 + trial % 15, 0.35);
    auto r = spectral_radius(g);
    check_result_invariants(g, r, kDefaultTolerance);
    CHECK(std::abs(r.rho - oracle::dense_rho(g)) <= 1e-9);
    if (r.connected)
      for (double v : r.x) CHECK(v > 0.0);
  }
}

TEST_CASE("disconnected graphs report the maximizing component") {
  auto g = disjoint_union(path_graph(3), complete_graph(4));
  auto r = spectral_radius(g);
  CHECK_FALSE(r.connected);
  CHECK(r.rho == doctest::Approx(3.0).epsilon(1e-12));
  for (Vertex v = 0; v < 3; ++v) CHECK(r.x[v] == 0.0);
  for (Vertex v = 3; v < 7; ++v) CHECK(r.x[v] > 0.0);
  CHECK(r.z == 3);
}

TEST_CASE("z breaks ties toward the smallest index") {
  CHECK(spectral_radius(cycle_graph(7)).z == 0);
  auto star = join(empty_graph(4), complete_graph(1));  // hub is vertex 4
  CHECK(spectral_radius(star).z == 4);
}

TEST_CASE("degree sandwich and edge monotonicity") {
  std::mt19937_64 rng(5);
  const double tol = kDefaultTolerance;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 10;
    auto g = random_graph(rng, n, 0.4);
    auto r = spectral_radius(g, tol);
    const auto deg = g.degrees();
    const double avg = 2.0 * g.edge_count() / n;
    CHECK(r.upper >= avg - tol);
    CHECK(r.lower <= *std::max_element(deg.begin(), deg.end()) + tol);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        auto plus = spectral_radius(std::move(GraphBuilder(g).add_edge(u, v)).build(), tol);
        CHECK(plus.lower >= r.upper - 2 * tol);
      }
  }
}

TEST_CASE("complete bipartite radius is sqrt(h(n-h))") {
  for (int h = 1; h <= 5; ++h)
    for (int n : {10, 37, 120, 200}) {
      auto r = spectral_radius(complete_bipartite(h, n - h));
      CHECK(std::abs(r.rho - std::sqrt(h * (n - h))) <= 1e-9);
    }
}

TEST_CASE("quotient radius examples") {
  CHECK(std::abs(quotient_radius(PartitionSpec{{2, 3}, 0}).rho - std::sqrt(6.0)) <= 1e-9);
  auto q = quotient_radius(PartitionSpec{{1, 2}, 17});
  CHECK(q.upper - q.lower <= kDefaultTolerance);
  CHECK(std::abs(q.rho - spectral_radius(complete_multipartite({{1, 2}, 17})).rho) <= 1e-8);
  CHECK(std::abs(q.rho - oracle::dense_rho(complete_multipartite({{1, 2}, 17}))) <= 1e-8);
  CHECK(quotient_radius(PartitionSpec{{}, 9}).rho == 0.0);
  CHECK_THROWS_AS(quotient_radius(PartitionSpec{{}, 0}), std::invalid_argument);
}

TEST_CASE("quotient radius does not depend on remainder size for cost") {
  auto r = quotient_radius(PartitionSpec{{3, 3}, 5'000'000});
  CHECK(r.upper - r.lower <= kDefaultTolerance);
  // K_{3,3} v empty(m): secular equation sum b_i / (rho + b_i) = 1.
  const double m = 5'000'000;
  const double secular = 3 / (r.rho + 3) + 3 / (r.rho + 3) + m / (r.rho + m);
  CHECK(secular == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("equitable quotients with clique blocks match dense solves") {
  EquitableQuotient q;
  const int hub = q.add_block(3, QuotientBlock::Kind::clique);
  const int edge = q.add_block(2, QuotientBlock::Kind::clique);
  const int rest = q.add_block(11, QuotientBlock::Kind::independent);
  q.join_blocks(hub, edge);
  q.join_blocks(hub, rest);
  auto g = q.realize();
  CHECK(g.order() == 16);
  CHECK(g.edge_count() == 3 + 1 + 3 * 13);
  CHECK(std::abs(quotient_radius(q).rho - oracle::dense_rho(g)) <= 1e-9);

  EquitableQuotient split;  // P_2 plus isolated vertices: reducible quotient
  split.add_block(2, QuotientBlock::Kind::clique);
  split.add_block(6, QuotientBlock::Kind::independent);
  CHECK(std::abs(quotient_radius(split).rho - 1.0) <= 1e-9);
}

TEST_CASE("quotient agrees with dense solves on candidates") {
  for (int k = 2; k <= 5; ++k)
    for (int s = 3; s <= 9; ++s)
      for (int n : {s + 2, s + 7, 40}) {
        auto c = extremal_candidate(n, k, s);
        CHECK(c.quotient.realize() == c.graph);
        CHECK(std::abs(quotient_radius(c.quotient).rho - oracle::dense_rho(c.graph)) <= 1e-8);
      }
}

TEST_CASE("rayleigh delta") {
  auto p4 = path_graph(4);
  auto r = spectral_radius(p4);
  CHECK(rayleigh_delta(p4, r.x, {}, {}) == 0.0);
  CHECK_THROWS_AS(rayleigh_delta(p4, r.x, {{0, 1}}, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(rayleigh_delta(p4, r.x, {{0, 2}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(rayleigh_delta(p4, r.x, {}, {{1, 2}}), std::invalid_argument);

  // Star with hub 0: moving a hub edge onto two leaves loses weight.
  auto star = star_graph(4);
  auto s = spectral_radius(star);
  auto dense = oracle::dense_perron(star);
  const double expected = 2 * dense[1] * (dense[2] - dense[0]);
  const double delta = rayleigh_delta(star, s.x, {{0, 1}}, {{1, 2}});
  CHECK(delta < 0.0);
  CHECK(delta == doctest::Approx(expected).epsilon(1e-8));
}

TEST_CASE("positive rayleigh delta certifies an increase") {
  std::mt19937_64 rng(21);
  int certified = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 8;
    auto g = random_graph(rng, n, 0.4);
    auto r = spectral_radius(g);
    auto edges = g.edges();
    if (edges.empty()) continue;
    std::uniform_int_distribution<int> pick_edge(0, static_cast<int>(edges.size()) - 1);
    std::uniform_int_distribution<int> pick_vertex(0, n - 1);
    auto removed = edges[pick_edge(rng)];
    const int a = pick_vertex(rng), b = pick_vertex(rng);
    if (a == b || g.adjacent(a, b)) continue;
    const double delta = rayleigh_delta(g, r.x, {removed}, {{a, b}});
    if (delta <= 1e-9) continue;
    GraphBuilder gb(g);
    gb.remove_edge(removed.first, removed.second).add_edge(a, b);
    CHECK(oracle::dense_rho(std::move(gb).build()) > oracle::dense_rho(g));
    ++certified;
  }
  CHECK(certified > 20);
}
