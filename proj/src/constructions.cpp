#include "spex/constructions.hpp"

#include <stdexcept>
#include <string>

namespace spex {

std::string_view case_tag(CandidateCase c) {
  switch (c) {
    case CandidateCase::single_edge: return "s=2";
    case CandidateCase::odd_small: return "odd,s<=2k-1";
    case CandidateCase::odd_large: return "odd,s>=2k+1";
    case CandidateCase::even_small: return "even,s<=2k-2";
    case CandidateCase::even_large: return "even,s>=2k";
    case CandidateCase::matching: return "matching";
  }
  return "";
}

namespace {

using Kind = QuotientBlock::Kind;

// Turan parts as independent blocks, pairwise joined, then an independent
// block of `rest` vertices joined to all of them.
Candidate turan_join_empty(int parts_order, int parts, int rest, CandidateCase kind) {
  const auto sizes = turan_part_sizes(parts_order, parts);
  EquitableQuotient q;
  for (int b : sizes) q.add_joined_block(b, Kind::independent);
  q.add_joined_block(rest, Kind::independent);
  return {join(turan(parts_order, parts), empty_graph(rest)), kind, std::move(q)};
}

Candidate clique_join_empty(int hubs, int rest, CandidateCase kind) {
  EquitableQuotient q;
  q.add_block(hubs, Kind::clique);
  q.add_joined_block(rest, Kind::independent);
  return {join(complete_graph(hubs), empty_graph(rest)), kind, std::move(q)};
}

// K_hubs joined with (P_2 plus an independent set of `rest` vertices).
Candidate clique_join_edge_plus_empty(int hubs, int rest, CandidateCase kind) {
  EquitableQuotient q;
  const int hub = q.add_block(hubs, Kind::clique);
  const int edge = q.add_block(2, Kind::clique);
  const int tail = q.add_block(rest, Kind::independent);
  q.join_blocks(hub, edge);
  q.join_blocks(hub, tail);
  return {join(complete_graph(hubs), disjoint_union(path_graph(2), empty_graph(rest))), kind,
          std::move(q)};
}

}  // namespace

Candidate extremal_candidate(int n, int k, int s) {
  if (k < 2) throw std::invalid_argument("extremal candidate needs k >= 2");
  if (s < 2) throw std::invalid_argument("extremal candidate needs s >= 2");
  if (n < s + 2) throw std::invalid_argument("extremal candidate needs n >= s + 2");

  if (s == 2) return clique_join_edge_plus_empty(0, n - 2, CandidateCase::single_edge);

  const bool odd = s % 2 == 1;
  const bool odd_small = odd && s <= 2 * k - 1;
  const bool odd_large = odd && s >= 2 * k + 1;
  const bool even_small = !odd && s <= 2 * k - 2;
  const bool even_large = !odd && s >= 2 * k;
  if (odd_small + odd_large + even_small + even_large != 1)
    throw std::logic_error("candidate cases are not exhaustive for k=" + std::to_string(k) +
                           " s=" + std::to_string(s));

  if (odd_small) return clique_join_empty((s - 1) / 2, n - (s - 1) / 2, CandidateCase::odd_small);
  if (odd_large)
    return turan_join_empty((s - 1) / 2, k - 1, n - (s - 1) / 2, CandidateCase::odd_large);
  if (even_small)
    return clique_join_edge_plus_empty(s / 2 - 1, n - s / 2 - 1, CandidateCase::even_small);
  return turan_join_empty(s / 2 - 1, k - 1, n - s / 2 + 1, CandidateCase::even_large);
}

Candidate matching_candidate(int n, int k, int s) {
  if (k < 2) throw std::invalid_argument("matching candidate needs k >= 2");
  if (s < 1) throw std::invalid_argument("matching candidate needs s >= 1");
  if (static_cast<std::int64_t>(n) < 4LL * s * s + 9LL * s)
    throw std::invalid_argument("matching candidate needs n >= 4s^2 + 9s");
  return turan_join_empty(s, k - 1, n - s, CandidateCase::matching);
}

std::string_view to_string(TuranNumberBreakdown::Shape shape) {
  switch (shape) {
    case TuranNumberBreakdown::Shape::clique_plus_isolated: return "clique-plus-isolated";
    case TuranNumberBreakdown::Shape::hub_join: return "hub-join";
    case TuranNumberBreakdown::Shape::hub_join_plus_edge: return "hub-join-plus-edge";
  }
  return "";
}

namespace {

std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

}  // namespace

TuranNumberBreakdown linear_forest_turan_number(std::int64_t n, std::int64_t s) {
  if (s < 1 || s > n - 1) throw std::invalid_argument("Turan number needs 1 <= s <= n - 1");
  TuranNumberBreakdown t;
  t.n = n;
  t.s = s;
  t.h = (s - 1) / 2;
  t.c = s % 2 == 0 ? 1 : 0;
  t.clique_term = choose2(s);
  t.star_term = choose2(n) - choose2(n - t.h) + t.c;
  if (t.clique_term > t.star_term) {
    t.value = t.clique_term;
    t.extremal_shape = TuranNumberBreakdown::Shape::clique_plus_isolated;
  } else {
    t.value = t.star_term;
    t.extremal_shape = t.c == 0 ? TuranNumberBreakdown::Shape::hub_join
                                : TuranNumberBreakdown::Shape::hub_join_plus_edge;
  }
  return t;
}

bool edge_upper_bound_check(std::int64_t n, std::int64_t s) {
  if (s < 3 || s > n - 1 || n < s + 2)
    throw std::invalid_argument("edge bound check needs 3 <= s and n >= s + 2");
  return linear_forest_turan_number(n, s).value <= ((s - 1) / 2) * n;
}

}  // namespace spex
