#include <doctest.h>

#include <cmath>

#include "brute.hpp"
#include "spex/constructions.hpp"
#include "spex/forbidden.hpp"

using namespace spex;

namespace {

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

// Vertices [0, hubs) form a clique joined to everything; optional edge on
// (hubs, hubs + 1).
Graph hub_graph(int n, int hubs, bool extra_edge) {
  EdgeList e;
  for (int u = 0; u < hubs; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  if (extra_edge) e.emplace_back(hubs, hubs + 1);
  return make_graph(n, e);
}

// Complete multipartite graph with the given part sizes, parts laid out in order.
Graph multipartite(const std::vector<int>& parts) {
  std::vector<int> owner;
  for (std::size_t p = 0; p < parts.size(); ++p) owner.insert(owner.end(), parts[p], p);
  const int n = static_cast<int>(owner.size());
  EdgeList e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (owner[u] != owner[v]) e.emplace_back(u, v);
  return make_graph(n, e);
}

}  // namespace

TEST_CASE("extremal candidates by case") {
  auto a = extremal_candidate(20, 3, 5);
  CHECK(a.kind == CandidateCase::odd_small);
  CHECK(case_tag(a.kind) == "odd,s<=2k-1");
  CHECK(a.graph == hub_graph(20, 2, false));

  auto b = extremal_candidate(20, 2, 7);
  CHECK(b.kind == CandidateCase::odd_large);
  CHECK(b.graph == multipartite({3, 17}));
  CHECK(b.graph == complete_bipartite(3, 17));

  auto c = extremal_candidate(20, 4, 6);
  CHECK(c.kind == CandidateCase::even_small);
  CHECK(c.graph == hub_graph(20, 2, true));

  auto d = extremal_candidate(20, 3, 8);
  CHECK(d.kind == CandidateCase::even_large);
  CHECK(d.graph == multipartite({2, 1, 17}));
  CHECK(d.graph.edge_count() == 2 + 3 * 17);

  auto e = extremal_candidate(6, 3, 2);
  CHECK(e.kind == CandidateCase::single_edge);
  CHECK(e.graph == hub_graph(6, 0, true));
}

TEST_CASE("extremal candidate domain") {
  CHECK_THROWS_AS(extremal_candidate(6, 2, 5), std::invalid_argument);
  CHECK_NOTHROW(extremal_candidate(7, 2, 5));
  CHECK_THROWS_AS(extremal_candidate(10, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(extremal_candidate(10, 2, 1), std::invalid_argument);
}

TEST_CASE("every parameter pair dispatches to the expected case") {
  for (int k = 2; k <= 8; ++k)
    for (int s = 3; s <= 20; ++s) {
      auto c = extremal_candidate(s + 2, k, s);
      if (s % 2 == 1)
        CHECK(c.kind == (s <= 2 * k - 1 ? CandidateCase::odd_small : CandidateCase::odd_large));
      else
        CHECK(c.kind == (s <= 2 * k - 2 ? CandidateCase::even_small : CandidateCase::even_large));
    }
}

TEST_CASE("matching candidates") {
  auto a = matching_candidate(100, 2, 3);
  CHECK(a.graph == complete_bipartite(3, 97));
  CHECK(a.kind == CandidateCase::matching);
  CHECK(matching_candidate(100, 4, 2).graph == hub_graph(100, 2, false));
  CHECK(matching_candidate(50, 3, 2).graph == multipartite({1, 1, 48}));
  CHECK_THROWS_AS(matching_candidate(20, 2, 2), std::invalid_argument);
  CHECK_NOTHROW(matching_candidate(34, 2, 2));
}

TEST_CASE("candidates are free, respect the lower bound and quotient layout") {
  for (int k = 2; k <= 5; ++k)
    for (int s = 3; s <= 9; ++s) {
      const int h = (s - 1) / 2;
      for (int n = s + 2; n <= 40; n += 3) {
        auto c = extremal_candidate(n, k, s);
        CHECK(c.graph.order() == n);
        CHECK(c.quotient.realize() == c.graph);
        CHECK(is_free(c.graph, ForbiddenFamily::linear_forest(k, s)).free);
        CHECK(quotient_radius(c.quotient).rho >= std::sqrt(double(h) * (n - h)) - 1e-9);
        CHECK(c.graph.edge_count() <= linear_forest_turan_number(n, s).value);
      }
    }
}

TEST_CASE("Turan number examples") {
  CHECK(linear_forest_turan_number(5, 3).value == 4);

  auto a = linear_forest_turan_number(6, 5);
  CHECK(a.value == 10);
  CHECK(a.clique_term == 10);
  CHECK(a.star_term == 9);
  CHECK(a.extremal_shape == TuranNumberBreakdown::Shape::clique_plus_isolated);
  CHECK(to_string(a.extremal_shape) == "clique-plus-isolated");

  auto b = linear_forest_turan_number(10, 5);
  CHECK(b.value == 17);
  CHECK(b.star_term == 45 - 28);
  CHECK(b.c == 0);
  CHECK(b.h == 2);
  CHECK(b.extremal_shape == TuranNumberBreakdown::Shape::hub_join);

  auto tie = linear_forest_turan_number(6, 4);
  CHECK(tie.clique_term == tie.star_term);
  CHECK(tie.c == 1);
  CHECK(tie.extremal_shape == TuranNumberBreakdown::Shape::hub_join_plus_edge);

  CHECK_THROWS_AS(linear_forest_turan_number(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(linear_forest_turan_number(5, 0), std::invalid_argument);
}

TEST_CASE("edge counts of the hub shapes equal the star term") {
  for (int s = 3; s <= 15; ++s)
    for (int n = s + 2; n <= 60; ++n) {
      const int h = (s - 1) / 2;
      auto t = linear_forest_turan_number(n, s);
      CHECK(t.value == std::max(choose2(s), choose2(n) - choose2(n - h) + (s % 2 == 0)));
      CHECK(hub_graph(n, h, s % 2 == 0).edge_count() == t.star_term);
    }
}

TEST_CASE("Turan numbers agree with exhaustive search up to 5 vertices") {
  for (int n = 3; n <= 5; ++n)
    for (int s = 1; s <= n - 1; ++s) {
      std::int64_t best = 0;
      brute::for_each_graph(n, [&](const Graph& g) {
        if (g.edge_count() > best && !brute::contains_linear_forest(g, s)) best = g.edge_count();
      });
      CHECK(linear_forest_turan_number(n, s).value == best);
    }
}

TEST_CASE("edge upper bound check") {
  CHECK(edge_upper_bound_check(10, 5));
  CHECK(edge_upper_bound_check(6, 4));
  CHECK_THROWS_AS(edge_upper_bound_check(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(edge_upper_bound_check(10, 2), std::invalid_argument);
  for (int s = 3; s <= 30; ++s)
    for (int n = s + 2; n <= 300; ++n) CHECK(edge_upper_bound_check(n, s));
}
