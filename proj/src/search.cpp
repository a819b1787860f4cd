#include "spex/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

#include "spex/constructions.hpp"
#include "spex/graph6.hpp"

namespace spex {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::matches: return "matches";
    case Verdict::candidate_suboptimal: return "candidate-suboptimal";
    case Verdict::candidate_optimal_tied: return "candidate-optimal-tied";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "";
}

namespace {

void check_cap(int n, int cap) {
  if (n < 0) throw std::invalid_argument("enumeration order must be non-negative");
  if (n > cap)
    throw std::invalid_argument("enumeration order " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
  if (n > 16) throw std::invalid_argument("enumeration beyond 16 vertices is not supported");
}

// Extends a graph whose vertices 0..i-1 are placed. Vertices >= i are still
// isolated, which does not affect freeness, so the builder's graph doubles as
// the induced prefix.
template <typename Visit>
void extend(GraphBuilder& b, int i, const ForbiddenFamily& fam, Visit& visit) {
  if (i == b.order()) {
    visit(b.view());
    return;
  }
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << i); ++mask) {
    for (int j = 0; j < i; ++j)
      if ((mask >> j) & 1u) b.add_edge(i, j);
    if (is_free(b.view(), fam).free) extend(b, i + 1, fam, visit);
    b.isolate(i);
  }
}

// Free prefixes with the first `depth` vertices placed, in enumeration order.
std::vector<Graph> free_prefixes(int n, int depth, const ForbiddenFamily& fam) {
  std::vector<Graph> out;
  GraphBuilder b(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == depth) {
      out.push_back(b.build());
      return;
    }
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << i); ++mask) {
      for (int j = 0; j < i; ++j)
        if ((mask >> j) & 1u) b.add_edge(i, j);
      if (is_free(b.view(), fam).free) rec(i + 1);
      b.isolate(i);
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::int64_t enumerate_free_graphs(int n, const ForbiddenFamily& fam,
                                   const std::function<void(const Graph&)>& visit, int cap) {
  check_cap(n, cap);
  fam.validate();
  std::int64_t count = 0;
  auto counting = [&](const Graph& g) {
    ++count;
    visit(g);
  };
  GraphBuilder b(n);
  extend(b, 0, fam, counting);
  return count;
}

std::vector<Graph> enumerate_free_graphs_up_to_isomorphism(int n, const ForbiddenFamily& fam,
                                                           int cap) {
  std::set<std::string> forms;
  enumerate_free_graphs(n, fam, [&](const Graph& g) { forms.insert(canonical_form(g)); }, cap);
  std::vector<Graph> out;
  for (const auto& f : forms) out.push_back(g6_decode(f));
  return out;
}

namespace {

struct BranchResult {
  std::int64_t count = 0;
  double best = -1.0;
  std::vector<std::pair<double, Graph>> near_best;
  std::set<std::string> forms;
};

void consider(BranchResult& r, const Graph& g, double tol, bool keep_forms) {
  ++r.count;
  if (keep_forms) r.forms.insert(canonical_form(g));
  const double rho = g.order() == 0 ? 0.0 : spectral_radius(g, tol).rho;
  if (rho > r.best) {
    r.best = rho;
    std::erase_if(r.near_best,
                  [&](const auto& e) { return e.first < r.best - kArgmaxTieTolerance; });
  }
  if (rho >= r.best - kArgmaxTieTolerance) r.near_best.emplace_back(rho, g);
}

}  // namespace

SearchReport brute_force_extremal(int n, const ForbiddenFamily& fam, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  check_cap(n, options.cap);
  fam.validate();
  if (options.workers < 1) throw std::invalid_argument("worker count must be positive");

  const int depth = std::min(n, 4);
  const auto prefixes = free_prefixes(n, depth, fam);
  std::vector<BranchResult> branches(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t = next++; t < prefixes.size(); t = next++) {
      GraphBuilder b(prefixes[t]);
      auto visit = [&](const Graph& g) {
        consider(branches[t], g, options.tolerance, options.count_unlabeled);
      };
      extend(b, depth, fam, visit);
    }
  };
  std::vector<std::thread> pool;
  const int extra = std::min<int>(options.workers, static_cast<int>(prefixes.size())) - 1;
  for (int w = 0; w < extra; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  SearchReport report;
  report.n = n;
  report.fam = fam;
  std::set<std::string> forms;
  for (auto& br : branches) {
    report.count_free += br.count;
    report.best_rho = std::max(report.best_rho, br.best);
    forms.merge(br.forms);
  }
  if (options.count_unlabeled) report.count_unlabeled = static_cast<std::int64_t>(forms.size());

  std::set<std::string> argmax;
  for (const auto& br : branches)
    for (const auto& [rho, g] : br.near_best)
      if (rho >= report.best_rho - kArgmaxTieTolerance) argmax.insert(canonical_form(g));
  report.argmax.assign(argmax.begin(), argmax.end());
  for (const auto& s : report.argmax) report.argmax_connected &= is_connected(g6_decode(s));

  if (fam.include_linear_forest && !fam.include_matching && n >= fam.s + 2) {
    auto candidate = extremal_candidate(n, fam.k, fam.s);
    report.candidate_rho = spectral_radius(candidate.graph, options.tolerance).rho;
    report.candidate = canonical_form(candidate.graph);
    report.candidate_case = std::string(case_tag(candidate.kind));
    const bool in_argmax = argmax.contains(*report.candidate);
    if (!in_argmax)
      report.verdict = Verdict::candidate_suboptimal;
    else if (argmax.size() == 1)
      report.verdict = Verdict::matches;
    else
      report.verdict = Verdict::candidate_optimal_tied;
  }

  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace spex
