#include "spex/report.hpp"

#include "spex/graph6.hpp"

namespace spex {

using nlohmann::json;

namespace {

json edges_json(const EdgeList& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

}  // namespace

json to_json(const ForbiddenFamily& fam) {
  return {{"k", fam.k},
          {"s", fam.s},
          {"h", fam.h()},
          {"alpha", fam.alpha()},
          {"forbid_linear_forest", fam.include_linear_forest},
          {"forbid_matching", fam.include_matching},
          {"matching_size", fam.matching_size()}};
}

json to_json(const SpectralResult& r, bool include_vector) {
  json out = {{"rho", r.rho},           {"lower", r.lower},
              {"upper", r.upper},       {"z", r.z},
              {"connected", r.connected}, {"iterations", r.iterations}};
  if (include_vector) out["x"] = r.x;
  return out;
}

json to_json(const FreenessResult& r) {
  json out = {{"free", r.free}};
  if (!r.free) {
    out["witness"] = {{"kind", std::string(to_string(r.witness.kind))},
                      {"vertices", r.witness.vertices},
                      {"edges", edges_json(r.witness.edges)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const TuranNumberBreakdown& t) {
  return {{"n", t.n},
          {"s", t.s},
          {"h", t.h},
          {"clique_term", t.clique_term},
          {"star_term", t.star_term},
          {"c", t.c},
          {"value", t.value},
          {"extremal_shape", std::string(to_string(t.extremal_shape))}};
}

json to_json(const SearchReport& r, bool include_timing) {
  json out = {{"n", r.n},
              {"k", r.fam.k},
              {"s", r.fam.s},
              {"family", to_json(r.fam)},
              {"count_free", r.count_free},
              {"count_unlabeled", r.count_unlabeled ? json(*r.count_unlabeled) : json(nullptr)},
              {"best_rho", r.best_rho},
              {"argmax", r.argmax},
              {"argmax_connected", r.argmax_connected},
              {"candidate", r.candidate ? json(*r.candidate) : json(nullptr)},
              {"candidate_case", r.candidate_case ? json(*r.candidate_case) : json(nullptr)},
              {"candidate_rho", r.candidate_rho ? json(*r.candidate_rho) : json(nullptr)},
              {"verdict", std::string(to_string(r.verdict))},
              {"snapshot_only", true}};
  if (include_timing) out["wall_time_s"] = r.wall_time_s;
  return out;
}

json to_json(const StructureReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"id", c.id}, {"statement", c.statement}, {"holds", c.holds}, {"margin", c.margin}});
  return {{"family", to_json(r.fam)},
          {"n", r.n},
          {"rho", r.rho},
          {"z", r.z},
          {"x", r.x},
          {"ratios", r.ratios},
          {"R_prime", r.r_prime},
          {"R_double_prime", r.r_double_prime},
          {"R", r.r},
          {"W", r.w},
          {"connected", r.connected},
          {"per_component_warning", r.per_component},
          {"diagnostic_only", true},
          {"order_threshold", r.order_threshold},
          {"checks", checks}};
}

json to_json(const ClimbResult& r) {
  json trace = json::array();
  for (const auto& s : r.trace)
    trace.push_back({{"kind", std::string(to_string(s.kind))},
                     {"u", s.u},
                     {"v", s.v},
                     {"delta", s.delta},
                     {"rho_before", s.rho_before},
                     {"rho_after", s.rho_after}});
  return {{"graph6", g6_encode(r.graph)},
          {"rho_start", r.rho_start},
          {"rho_end", r.rho_end},
          {"steps", r.trace.size()},
          {"trace", trace}};
}

}  // namespace spex
