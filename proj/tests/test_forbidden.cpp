#include <doctest.h>

#include <random>
#include <set>

#include "brute.hpp"
#include "spex/forbidden.hpp"

using namespace spex;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

bool edges_in_graph(const Graph& g, const EdgeList& edges) {
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (!g.adjacent(u, v)) return false;
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) return false;
  }
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("clique number examples") {
  CHECK(clique_number(complete_graph(5)) == 5);
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(turan(9, 3)) == 3);
  CHECK(clique_number(empty_graph(4)) == 1);
  CHECK(clique_number(empty_graph(0)) == 0);
  CHECK(contains_clique(complete_graph(4), 4));
  CHECK_FALSE(contains_clique(complete_graph(4), 5));
  CHECK(contains_clique(empty_graph(3), 0));
}

TEST_CASE("linear forest examples") {
  for (int n = 1; n <= 12; ++n) CHECK(max_linear_forest(path_graph(n)) == n - 1);
  CHECK(max_linear_forest(star_graph(5)) == 2);
  CHECK(max_linear_forest(complete_graph(4)) == 3);
  CHECK(max_linear_forest(join(complete_graph(2), empty_graph(18))) == 4);
  CHECK(max_linear_forest(cycle_graph(9)) == 8);
  CHECK(max_linear_forest(empty_graph(6)) == 0);
}

TEST_CASE("matching examples") {
  CHECK(max_matching(path_graph(4)) == 2);
  CHECK(max_matching(cycle_graph(7)) == 3);
  CHECK(max_matching(complete_bipartite(2, 18)) == 2);
  CHECK(max_matching(complete_graph(9)) == 4);
}

TEST_CASE("exact solvers agree with exhaustive oracles on random graphs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 9;
    auto g = random_graph(rng, n, trial % 3 == 0 ? 0.7 : 0.4);
    if (g.edge_count() > 22) continue;
    CHECK(clique_number(g) == brute::clique_number(g));
    CHECK(max_linear_forest(g) == brute::max_linear_forest(g));
    CHECK(max_matching(g) == brute::max_matching(g));

    auto clique = max_clique(g);
    CHECK(is_clique(g, clique));
    auto forest = maximum_linear_forest(g);
    CHECK(edges_in_graph(g, forest));
    CHECK(brute::is_linear_forest(n, forest));
    auto matching = maximum_matching(g);
    CHECK(edges_in_graph(g, matching));
    CHECK(brute::is_matching(n, matching));
  }
}

TEST_CASE("exact solvers on graphs with many twins") {
  // Joins of cliques and independent sets are full of false twins, which
  // the solvers collapse before searching.
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 5; ++b) {
      auto g = join(complete_graph(a), empty_graph(b));
      CHECK(clique_number(g) == a + 1);
      const int m = std::min(a, b);
      CHECK(max_matching(g) == m + (a - m) / 2);
      auto forest = maximum_linear_forest(g);
      CHECK(brute::is_linear_forest(g.order(), forest));
      // Hamiltonian path when b <= a + 1; otherwise every edge has a clique
      // endpoint, capping the forest at 2a edges.
      const int covered = std::min(a + b, a + std::min(b, a + 1));
      CHECK(static_cast<int>(forest.size()) == covered - 1);
    }
}

TEST_CASE("find helpers return exact sizes") {
  auto g = join(complete_graph(3), empty_graph(6));
  auto c = find_clique(g, 3);
  REQUIRE(c);
  CHECK(c->size() == 3);
  CHECK(is_clique(g, *c));
  CHECK_FALSE(find_clique(g, 5));

  for (int s = 0; s <= max_linear_forest(g); ++s) {
    auto f = find_linear_forest(g, s);
    REQUIRE(f);
    CHECK(static_cast<int>(f->size()) == s);
    CHECK(brute::is_linear_forest(g.order(), *f));
    CHECK(edges_in_graph(g, *f));
  }
  CHECK_FALSE(find_linear_forest(g, max_linear_forest(g) + 1));

  auto m = find_matching(g, 3);
  REQUIRE(m);
  CHECK(m->size() == 3);
  CHECK_FALSE(find_matching(g, 4));
}

TEST_CASE("is_free examples") {
  auto star = star_graph(9);
  CHECK(is_free(star, ForbiddenFamily::linear_forest(2, 3)).free);

  for (int k = 2; k <= 4; ++k) {
    auto r = is_free(complete_graph(k + 1), ForbiddenFamily::linear_forest(k, 2 * k + 5));
    CHECK_FALSE(r.free);
    CHECK(r.witness.kind == Witness::Kind::clique);
    CHECK(r.witness.vertices.size() == static_cast<std::size_t>(k + 1));
  }

  auto p6 = is_free(path_graph(6), ForbiddenFamily::linear_forest(2, 5));
  CHECK_FALSE(p6.free);
  CHECK(p6.witness.kind == Witness::Kind::linear_forest);
  CHECK(p6.witness.edges.size() == 5);
  CHECK(brute::is_linear_forest(6, p6.witness.edges));
  CHECK(edges_in_graph(path_graph(6), p6.witness.edges));
}

TEST_CASE("matching family") {
  auto fam = ForbiddenFamily::matching(3, 2);
  CHECK_FALSE(fam.include_linear_forest);
  CHECK(fam.include_matching);
  CHECK(fam.matching_size() == 3);
  // K_{1,1,48} has a 2-edge path but no 3-edge matching.
  auto g = join(complete_graph(2), empty_graph(48));
  CHECK(is_free(g, fam).free);
  CHECK_FALSE(is_free(g, ForbiddenFamily::linear_forest(3, 2)).free);
  auto r = is_free(cycle_graph(6), ForbiddenFamily::matching(2, 2));
  CHECK_FALSE(r.free);
  CHECK(r.witness.kind == Witness::Kind::matching);
  CHECK(r.witness.edges.size() == 3);
  CHECK(brute::is_matching(6, r.witness.edges));
}

TEST_CASE("family parameters") {
  auto fam = ForbiddenFamily::linear_forest(3, 7);
  CHECK(fam.h() == 3);
  CHECK(fam.alpha() == doctest::Approx(1.0 / (36.0 * 64.0)));
  CHECK(ForbiddenFamily::linear_forest(2, 4).h() == 1);
  CHECK_THROWS_AS(ForbiddenFamily::linear_forest(1, 3).validate(), std::invalid_argument);
  CHECK_THROWS_AS(ForbiddenFamily::linear_forest(2, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(is_free(path_graph(3), ForbiddenFamily{1, 3, true, false}), std::invalid_argument);
}

TEST_CASE("is_free agrees with exhaustive containment on random graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 6;
    auto g = random_graph(rng, n, 0.45);
    if (g.edge_count() > 18) continue;
    const int k = 2 + trial % 3;
    const int s = 2 + trial % 5;
    const bool expected = brute::clique_number(g) <= k && !brute::contains_linear_forest(g, s);
    CHECK(is_free(g, ForbiddenFamily::linear_forest(k, s)).free == expected);
  }
}
