#include "spex/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "spex/graph6.hpp"
#include "spex/report.hpp"

namespace spex::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::vector<int> n;
  int k = 2;
  int s = 3;
  bool matching = false;
  double tolerance = kDefaultTolerance;
  int workers = 1;
  int cap = kDefaultEnumerationCap;
  bool unlabeled = false;
  bool timing = false;
  std::string format;
  std::string in_path;
  std::string out_path;

  json to_json() const {
    return {{"command", command},     {"n", n},
            {"k", k},                 {"s", s},
            {"matching", matching},   {"tolerance", tolerance},
            {"workers", workers},     {"cap", cap},
            {"unlabeled", unlabeled}, {"timing", timing},
            {"format", format},
            {"in", in_path},          {"out", out_path}};
  }
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string csv_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::vector<std::pair<std::string, Graph>> read_graphs(std::istream& in) {
  std::vector<std::pair<std::string, Graph>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      out.emplace_back(line, g6_decode(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (out.empty()) throw UsageError("no graph6 input");
  return out;
}

ForbiddenFamily family(const RunConfig& c) {
  return c.matching ? ForbiddenFamily::matching(c.k, c.s) : ForbiddenFamily::linear_forest(c.k, c.s);
}

int single_n(const RunConfig& c) {
  if (c.n.size() != 1) throw UsageError("--n takes exactly one value for " + c.command);
  return c.n.front();
}

void require_format(const RunConfig& c, std::initializer_list<std::string_view> allowed) {
  for (auto f : allowed)
    if (c.format == f) return;
  throw UsageError("format " + c.format + " not supported by " + c.command);
}

json document(const RunConfig& c, json results) {
  return {{"schema", kSchemaVersion}, {"command", c.command}, {"config", c.to_json()},
          {"results", std::move(results)}};
}

void dispatch(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!(c.tolerance > 0.0)) throw UsageError("--tol must be positive");
  std::ifstream file;
  std::istream* source = &in;
  auto graphs = [&] {
    if (!c.in_path.empty()) {
      file.open(c.in_path);
      if (!file) throw Graph6Error("cannot open " + c.in_path);
      source = &file;
    }
    return read_graphs(*source);
  };

  if (c.command == "rho") {
    require_format(c, {"json", "csv"});
    json results = json::array();
    if (c.format == "csv") out << "graph6,n,rho,lower,upper,z\n";
    for (const auto& [text, g] : graphs()) {
      auto r = spectral_radius(g, c.tolerance);
      if (c.format == "csv") {
        out << text << ',' << g.order() << ',' << csv_number(r.rho) << ',' << csv_number(r.lower)
            << ',' << csv_number(r.upper) << ',' << r.z << '\n';
      } else {
        auto j = to_json(r);
        j["graph6"] = text;
        j["n"] = g.order();
        results.push_back(j);
      }
    }
    if (c.format == "json") out << document(c, results).dump(2) << '\n';
  } else if (c.command == "free") {
    require_format(c, {"json", "csv"});
    const auto fam = family(c);
    json results = json::array();
    if (c.format == "csv") out << "graph6,free,witness_kind\n";
    for (const auto& [text, g] : graphs()) {
      auto r = is_free(g, fam);
      if (c.format == "csv") {
        out << text << ',' << (r.free ? "true" : "false") << ',' << to_string(r.witness.kind) << '\n';
      } else {
        auto j = to_json(r);
        j["graph6"] = text;
        results.push_back(j);
      }
    }
    if (c.format == "json") out << document(c, results).dump(2) << '\n';
  } else if (c.command == "candidate") {
    const int n = single_n(c);
    auto cand = c.matching ? matching_candidate(n, c.k, c.s) : extremal_candidate(n, c.k, c.s);
    const auto text = g6_encode(cand.graph);
    const auto tag = std::string(case_tag(cand.kind));
    if (c.format == "graph6") {
      out << text << '\n';
      err << "case: " << tag << '\n';
      return;
    }
    const double rho = quotient_radius(cand.quotient, c.tolerance).rho;
    if (c.format == "csv") {
      out << "n,k,s,case,graph6,rho\n"
          << n << ',' << c.k << ',' << c.s << ',' << tag << ',' << text << ',' << csv_number(rho)
          << '\n';
      return;
    }
    json r = {{"graph6", text},  {"case", tag}, {"n", n}, {"edges", cand.graph.edge_count()},
              {"rho", rho}};
    out << document(c, json::array({r})).dump(2) << '\n';
  } else if (c.command == "turan-number") {
    require_format(c, {"json", "csv"});
    const auto t = linear_forest_turan_number(single_n(c), c.s);
    if (c.format == "csv") {
      out << "n,s,h,clique_term,star_term,c,value,extremal_shape\n"
          << t.n << ',' << t.s << ',' << t.h << ',' << t.clique_term << ',' << t.star_term << ','
          << t.c << ',' << t.value << ',' << to_string(t.extremal_shape) << '\n';
      return;
    }
    out << document(c, json::array({to_json(t)})).dump(2) << '\n';
  } else if (c.command == "brute") {
    require_format(c, {"json", "csv"});
    if (c.n.empty()) throw UsageError("--n is required");
    const auto fam = family(c);
    SearchOptions opts{c.cap, c.workers, c.unlabeled, c.tolerance};
    json results = json::array();
    if (c.format == "csv") out << "n,k,s,candidate_rho,best_rho,verdict\n";
    for (int n : c.n) {
      auto rep = brute_force_extremal(n, fam, opts);
      if (c.format == "csv") {
        out << n << ',' << c.k << ',' << c.s << ','
            << (rep.candidate_rho ? csv_number(*rep.candidate_rho) : "") << ','
            << csv_number(rep.best_rho) << ',' << to_string(rep.verdict) << '\n';
      } else {
        results.push_back(to_json(rep, c.timing));
      }
    }
    if (c.format == "json") out << document(c, results).dump(2) << '\n';
  } else if (c.command == "climb") {
    require_format(c, {"json", "csv", "graph6"});
    const auto fam = family(c);
    json results = json::array();
    if (c.format == "csv") out << "graph6_start,graph6_end,rho_start,rho_end,steps\n";
    for (const auto& [text, g] : graphs()) {
      auto r = zykov_climb(g, fam, ClimbOptions{std::min(c.tolerance, 1e-12), 10'000});
      if (c.format == "graph6") {
        out << g6_encode(r.graph) << '\n';
      } else if (c.format == "csv") {
        out << text << ',' << g6_encode(r.graph) << ',' << csv_number(r.rho_start) << ','
            << csv_number(r.rho_end) << ',' << r.trace.size() << '\n';
      } else {
        auto j = to_json(r);
        j["start"] = text;
        results.push_back(j);
      }
    }
    if (c.format == "json") out << document(c, results).dump(2) << '\n';
  } else if (c.command == "audit") {
    require_format(c, {"json", "csv"});
    const auto fam = family(c);
    json results = json::array();
    if (c.format == "csv") out << "graph6,n,rho,z,R_prime,R_double_prime,R,W,connected\n";
    for (const auto& [text, g] : graphs()) {
      auto r = structure_sets(g, fam, c.tolerance);
      if (c.format == "csv") {
        out << text << ',' << r.n << ',' << csv_number(r.rho) << ',' << r.z << ','
            << r.r_prime.size() << ',' << r.r_double_prime.size() << ',' << r.r.size() << ','
            << r.w.size() << ',' << (r.connected ? "true" : "false") << '\n';
      } else {
        auto j = to_json(r);
        j["graph6"] = text;
        results.push_back(j);
      }
    }
    if (c.format == "json") out << document(c, results).dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Spectral extremal toolkit for {K_{k+1}, L_s}-free graphs", "spex"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--k", config.k, "Clique parameter (forbids K_{k+1})")->required();
    sub->add_option("--s", config.s, "Linear forest size (forbids L_s)")->required();
    sub->add_flag("--matching", config.matching, "Forbid M_{s+1} instead of L_s");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--in", config.in_path, "graph6 input file (default: stdin)");
  };

  std::vector<std::pair<CLI::App*, std::string>> subs;
  auto* rho = app.add_subcommand("rho", "Spectral radius of graph6 input");
  subs.emplace_back(rho, "json");
  auto* free_cmd = app.add_subcommand("free", "Check graph6 input for forbidden structures");
  subs.emplace_back(free_cmd, "json");
  auto* candidate = app.add_subcommand("candidate", "Emit the extremal candidate");
  subs.emplace_back(candidate, "graph6");
  auto* turan_number = app.add_subcommand("turan-number", "Linear forest Turan number");
  subs.emplace_back(turan_number, "json");
  auto* brute = app.add_subcommand("brute", "Exhaustive search for the spectral extremum");
  subs.emplace_back(brute, "json");
  auto* climb = app.add_subcommand("climb", "Zykov and edge-addition ascent from graph6 input");
  subs.emplace_back(climb, "json");
  auto* audit = app.add_subcommand("audit", "Perron structure sets and diagnostic inequalities");
  subs.emplace_back(audit, "json");

  for (auto* sub : {rho, free_cmd, climb, audit}) add_input(sub);
  for (auto* sub : {free_cmd, candidate, brute, climb, audit}) add_family(sub);
  candidate->add_option("--n", config.n, "Order")->required()->expected(1);
  brute->add_option("--n", config.n, "Order(s) to enumerate")->required()->expected(1, 64);
  brute->add_option("--workers", config.workers, "Worker threads")->capture_default_str();
  brute->add_option("--cap", config.cap, "Largest order allowed")->capture_default_str();
  brute->add_flag("--unlabeled", config.unlabeled, "Also count isomorphism classes");
  brute->add_flag("--timing", config.timing, "Include wall time in the report");
  turan_number->add_option("--n", config.n, "Order")->required()->expected(1);
  turan_number->add_option("--s", config.s, "Linear forest size")->required();

  for (auto& [sub, def] : subs) {
    sub->add_option("--tol", config.tolerance, "Bracket width for spectral solves")
        ->capture_default_str();
    sub->add_option("--format", config.format, "Output format: json, csv or graph6")
        ->check(CLI::IsMember({"json", "csv", "graph6"}));
    sub->add_option("--out", config.out_path, "Write the report to this file");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  for (auto& [sub, def] : subs) {
    if (!sub->parsed()) continue;
    config.command = sub->get_name();
    if (config.format.empty()) config.format = def;
  }

  try {
    if (config.out_path.empty()) {
      dispatch(config, in, out, err);
    } else {
      std::ofstream file(config.out_path);
      if (!file) throw std::runtime_error("cannot write " + config.out_path);
      dispatch(config, in, file, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace spex::cli
