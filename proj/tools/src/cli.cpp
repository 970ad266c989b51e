#include "bundlefd_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <bundlefd/connectivity.hpp>
#include <bundlefd/errors.hpp>
#include <bundlefd/fault_metrics.hpp>
#include <bundlefd/graph_io.hpp>
#include <bundlefd/routing.hpp>

#include "bundlefd_cli/spec_language.hpp"

namespace bundlefd::cli {
namespace {

using nlohmann::json;

std::string hex(std::uint64_t value) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << value;
  return s.str();
}

json to_json(const Distance& d) {
  if (d.is_infinite()) return "inf";
  return d.value();
}

json to_json(const FaultSet& fs) {
  json edges = json::array();
  for (const Edge& e : fs.edges) edges.push_back({e.u, e.v});
  return {{"vertices", fs.vertices}, {"edges", edges}};
}

std::string to_text(const FaultSet& fs) {
  std::ostringstream s;
  s << fs;
  return s.str();
}

std::string to_text(const PathSeq& p) {
  std::ostringstream s;
  s << p;
  return s.str();
}

class Table {
 public:
  explicit Table(std::ostream& out) : out_(out) {}
  template <class T>
  Table& row(const std::string& key, const T& value) {
    out_ << std::left << std::setw(14) << key << ' ' << value << '\n';
    return *this;
  }

 private:
  std::ostream& out_;
};

std::string describe(const Graph& g) {
  return "n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + " fingerprint=" + hex(fingerprint(g));
}

const Graph& graph_input(const RunConfig& config, std::optional<Graph>& storage) {
  if (!config.graph.empty()) {
    storage = parse_graph_spec(config.graph);
  } else if (!config.bundle.empty()) {
    storage = parse_bundle_spec(config.bundle).total();
  } else {
    throw InvalidArgument("one of --graph or --bundle is required");
  }
  return *storage;
}

Bundle bundle_input(const RunConfig& config) {
  if (config.bundle.empty()) throw InvalidArgument("--bundle is required");
  return parse_bundle_spec(config.bundle);
}

int cmd_gen(const RunConfig& config, std::ostream& out) {
  std::string text;
  if (!config.bundle.empty()) {
    text = to_bundle_text(parse_bundle_spec(config.bundle));
  } else {
    std::optional<Graph> g;
    text = to_edge_list(graph_input(config, g));
  }
  if (config.output.empty()) {
    out << text;
  } else {
    std::ofstream file(config.output);
    if (!file) throw InvalidArgument("cannot write " + config.output);
    file << text;
  }
  return kSuccess;
}

int cmd_metrics(const RunConfig& config, std::ostream& out) {
  std::optional<Graph> storage;
  const Graph& g = graph_input(config, storage);
  const auto result = mixed_fault_diameter(g, config.vertex_faults, config.edge_faults, config.enumeration);
  const int kappa = vertex_connectivity(g);
  const int lambda = edge_connectivity(g);
  if (config.json) {
    json doc{{"graph", config.graph.empty() ? config.bundle : config.graph},
             {"order", g.order()},
             {"size", g.size()},
             {"fingerprint", hex(fingerprint(g))},
             {"kappa", kappa},
             {"lambda", lambda},
             {"min_degree", g.min_degree()},
             {"diameter", to_json(diameter(g))},
             {"vertex_faults", config.vertex_faults},
             {"edge_faults", config.edge_faults},
             {"value", to_json(result.value)},
             {"witness", to_json(result.witness)},
             {"witness_pair", result.witness_pair ? json{result.witness_pair->first, result.witness_pair->second} : json()},
             {"evaluated", result.evaluated}};
    out << doc.dump(2) << '\n';
    return kSuccess;
  }
  Table t(out);
  t.row("graph", describe(g))
      .row("kappa", kappa)
      .row("lambda", lambda)
      .row("min_degree", g.min_degree())
      .row("diameter", diameter(g))
      .row("faults", "p=" + std::to_string(config.vertex_faults) + " q=" + std::to_string(config.edge_faults))
      .row("value", result.value)
      .row("witness", to_text(result.witness));
  if (result.witness_pair) {
    t.row("witness_pair", std::to_string(result.witness_pair->first) + "," + std::to_string(result.witness_pair->second));
  }
  t.row("evaluated", result.evaluated);
  return kSuccess;
}

std::vector<BoundReport> run_checks(const RunConfig& config, const Bundle& b) {
  const auto& o = config.enumeration;
  const std::string& t = config.theorem;
  const bool all = t == "all";
  const Side side = config.side == "base" ? Side::Base : Side::Fibre;
  if (config.side != "base" && config.side != "fibre") throw InvalidArgument("--side must be fibre or base");
  std::vector<BoundReport> reports;
  if (all || t == "vfd-improved") reports.push_back(check_vfd_improved(b, config.a, config.b, o));
  if (all || t == "efd-improved") reports.push_back(check_efd_improved(b, config.a, config.b, o));
  if (all || t == "vfd-plus-one") reports.push_back(check_baseline_bounds(b, config.a, config.b, FaultKind::Vertex, o));
  if (all || t == "efd-plus-one") reports.push_back(check_baseline_bounds(b, config.a, config.b, FaultKind::Edge, o));
  if (all || t == "mixed-conn") {
    reports.push_back(
        check_mixed_connectivity_bound(b, config.p_fibre, config.q_fibre, config.p_base, config.q_base, o));
  }
  if (t == "mixed-fd") reports.push_back(check_mixed_fd_bounds(b, config.p, config.q, side, o));
  if (all && config.p + config.q > 0) {
    reports.push_back(check_mixed_fd_bounds(b, config.p, config.q, Side::Fibre, o));
    reports.push_back(check_mixed_fd_bounds(b, config.p, config.q, Side::Base, o));
  }
  if (all || t == "diam-decomp") reports.push_back(check_diameter_decomposition(b, o));
  if (reports.empty()) throw InvalidArgument("unknown theorem '" + t + "'");
  return reports;
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  const Bundle b = bundle_input(config);
  const auto reports = run_checks(config, b);
  const std::string print = hex(fingerprint(b.total()));
  json docs = json::array();
  bool violated = false;
  bool unmet = false;
  for (const BoundReport& r : reports) {
    violated = violated || r.verdict == Verdict::Violated;
    unmet = unmet || r.verdict == Verdict::HypothesisUnmet;
    if (config.json) {
      json doc = json::parse(bundlefd::to_json(r));
      doc["bundle"] = config.bundle;
      doc["fingerprint"] = print;
      docs.push_back(std::move(doc));
    } else {
      out << "bundle=" << config.bundle << '\n' << "fingerprint=" << print << '\n' << to_key_value(r);
    }
  }
  if (config.json) out << docs.dump(2) << '\n';
  if (violated) return kViolated;
  return unmet ? kHypothesisUnmet : kSuccess;
}

int cmd_route(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Bundle b = bundle_input(config);
  const FaultSet faults(config.fault_vertices, config.fault_edges);
  faults.validate(b.total());
  const PathSeq oracle = shortest_path_oracle(b, faults, config.from, config.to);

  std::optional<RouteResult> routed;
  std::string router = "oracle";
  Distance bound = Distance::infinite();
  int code = kSuccess;
  try {
    if (!faults.vertices.empty() && faults.edges.empty()) {
      router = "vertex";
      const VertexFaultRouter r(b, config.a, config.b, VertexCertificates::compute(b, config.a, config.b, config.enumeration));
      bound = r.bound();
      routed = r.route(faults, config.from, config.to);
    } else if (faults.vertices.empty()) {
      router = "edge";
      const EdgeFaultRouter r(b, config.a, config.b, EdgeCertificates::compute(b, config.a, config.b, config.enumeration));
      bound = r.bound();
      routed = r.route(faults, config.from, config.to);
    } else {
      throw HypothesisUnmet("the routers handle either vertex faults or edge faults, not both");
    }
  } catch (const HypothesisUnmet& e) {
    err << "notice: routing refused (" << e.what() << "); using the shortest-path oracle\n";
    router = "oracle";
    code = kHypothesisUnmet;
  } catch (const InvalidArgument& e) {
    err << "notice: routing refused (" << e.what() << "); using the shortest-path oracle\n";
    router = "oracle";
    code = kHypothesisUnmet;
  }

  const PathSeq& path = routed ? routed->path : oracle;
  if (config.json) {
    json doc{{"bundle", config.bundle},
             {"fingerprint", hex(fingerprint(b.total()))},
             {"faults", to_json(faults)},
             {"router", router},
             {"path", path.vertices},
             {"length", path.length()},
             {"bound", to_json(bound)},
             {"oracle_length", oracle.length()}};
    if (routed) {
      doc["branch"] = std::string(to_string(routed->trace.branch));
      if (routed->trace.base_path) doc["base_path"] = routed->trace.base_path->vertices;
    }
    out << doc.dump(2) << '\n';
    return code;
  }
  Table t(out);
  t.row("bundle", describe(b.total())).row("faults", to_text(faults)).row("router", router);
  if (routed) {
    t.row("branch", to_string(routed->trace.branch));
    if (routed->trace.base_path) t.row("base_path", to_text(*routed->trace.base_path));
  }
  t.row("path", to_text(path)).row("length", path.length()).row("bound", bound).row("oracle_length", oracle.length());
  return code;
}

int cmd_search(const RunConfig& config, std::ostream& out) {
  const GapSearchResult result = search_mixed_connectivity_gap(config.max_vertices, config.seed);
  auto emit = [&](const char* label, const std::optional<Graph>& g) {
    if (!g) {
      out << label << ": none found\n";
      return;
    }
    Table t(out);
    t.row(label, describe(*g)).row("kappa", vertex_connectivity(*g)).row("lambda", edge_connectivity(*g));
    if (auto cut = find_disconnecting_set(*g, 1, 1, config.enumeration)) t.row("cut(1,1)", to_text(*cut));
    out << to_edge_list(*g) << '\n';
  };
  if (config.json) {
    auto doc = [&](const std::optional<Graph>& g) -> json {
      if (!g) return nullptr;
      json d{{"order", g->order()},
             {"edges", json::array()},
             {"fingerprint", hex(fingerprint(*g))},
             {"kappa", vertex_connectivity(*g)},
             {"lambda", edge_connectivity(*g)}};
      for (const Edge& e : g->edges()) d["edges"].push_back({e.u, e.v});
      if (auto cut = find_disconnecting_set(*g, 1, 1, config.enumeration)) d["cut"] = to_json(*cut);
      return d;
    };
    out << json{{"examined", result.graphs_examined},
                {"not_mixed_connected", doc(result.not_mixed_connected)},
                {"mixed_connected", doc(result.mixed_connected)}}
               .dump(2)
        << '\n';
  } else {
    out << "examined " << result.graphs_examined << " graphs\n";
    emit("not_(1,1)+connected", result.not_mixed_connected);
    emit("(1,1)+connected", result.mixed_connected);
  }
  return result.not_mixed_connected && result.mixed_connected ? kSuccess : kViolated;
}

int cmd_report(const RunConfig& config, std::ostream& out) {
  const auto rows = twisted_torus_report(config.torus_order, config.enumeration);
  bool any_match = false;
  bool violated = false;
  for (const TwistRow& r : rows) {
    any_match = any_match || r.matches_example();
    violated = violated || r.baseline_vertex == Verdict::Violated || r.improved_vertex == Verdict::Violated;
  }
  if (config.json) {
    json doc = json::array();
    for (const TwistRow& r : rows) {
      doc.push_back({{"twist", r.name},
                     {"images", std::vector<Vertex>(r.twist.images().begin(), r.twist.images().end())},
                     {"fingerprint", hex(r.fingerprint)},
                     {"D", to_json(r.diameter)},
                     {"DV1", to_json(r.vertex_fd1)},
                     {"DE1", to_json(r.edge_fd1)},
                     {"DV3", to_json(r.vertex_fd3)},
                     {"DV3_witness", to_json(r.vertex_fd3_witness)},
                     {"decomposition_equality", r.decomposition_equality},
                     {"VFD_PLUS_ONE", to_string(r.baseline_vertex)},
                     {"VFD_IMPROVED", to_string(r.improved_vertex)},
                     {"DV3_is_5", r.vertex_fd3 == Distance(5)},
                     {"matches_example", r.matches_example()}});
    }
    out << doc.dump(2) << '\n';
  } else {
    out << std::left << std::setw(7) << "twist" << std::setw(18) << "fingerprint" << std::setw(4) << "D" << std::setw(5)
        << "DV1" << std::setw(5) << "DE1" << std::setw(5) << "DV3" << std::setw(10) << "equality" << std::setw(21)
        << "VFD_PLUS_ONE" << std::setw(18) << "VFD_IMPROVED"
        << "matches\n";
    for (const TwistRow& r : rows) {
      out << std::left << std::setw(7) << r.name << std::setw(18) << hex(r.fingerprint) << std::setw(4)
          << r.diameter.to_string() << std::setw(5) << r.vertex_fd1.to_string() << std::setw(5)
          << r.edge_fd1.to_string() << std::setw(5) << r.vertex_fd3.to_string() << std::setw(10)
          << (r.decomposition_equality ? "yes" : "no") << std::setw(21) << to_string(r.baseline_vertex)
          << std::setw(18) << to_string(r.improved_vertex) << (r.matches_example() ? "yes" : "no") << '\n';
    }
  }
  if (violated) return kViolated;
  return any_match ? kSuccess : kViolated;
}

Edge parse_edge_token(const std::string& token) {
  const auto dash = token.find('-');
  if (dash == std::string::npos) throw InvalidArgument("edge '" + token + "' must look like u-v");
  try {
    return Edge(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
  } catch (const std::logic_error&) {
    throw InvalidArgument("edge '" + token + "' must look like u-v");
  }
}

}  // namespace

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BUNDLEFD_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(env, &used);
      if (used == std::string(env).size() && value > 0) return value;
    } catch (const std::logic_error&) {
    }
  }
  return EnumerationOptions{}.budget;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.enumeration.budget == 0) throw InvalidArgument("the budget must be positive");
    switch (config.command) {
      case Command::Gen: return cmd_gen(config, out);
      case Command::Metrics: return cmd_metrics(config, out);
      case Command::Check: return cmd_check(config, out);
      case Command::Route: return cmd_route(config, out, err);
      case Command::Search: return cmd_search(config, out);
      case Command::Report: return cmd_report(config, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (raise it with --budget or BUNDLEFD_BUDGET)\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.enumeration.budget = default_budget();
  std::string fault_vertices;
  std::string fault_edges;

  CLI::App app{"Fault diameters and fault-tolerant routing in Cartesian graph bundles", "bundlefd"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--budget", config.enumeration.budget, "Maximum fault sets one enumeration may evaluate");
  app.add_option("--threads", config.enumeration.threads, "Worker threads (0 = hardware concurrency)");
  app.add_flag("--json", config.json, "Structured JSON output");

  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("--graph", config.graph, "Graph expression, e.g. C4, K4-e, circulant(16,[1,4]), file:g.txt");
    sub->add_option("--bundle", config.bundle, "Bundle expression, e.g. product(C4,C4), torus(4,rot1)");
  };

  CLI::App* gen = app.add_subcommand("gen", "Write a graph as an edge list or a bundle in bundle text format");
  add_inputs(gen);
  gen->add_option("-o,--output", config.output, "Output file (default: stdout)");

  CLI::App* metrics = app.add_subcommand("metrics", "Connectivity and the mixed fault diameter D_(p,q)");
  add_inputs(metrics);
  metrics->add_option("--vertex-faults", config.vertex_faults)->check(CLI::NonNegativeNumber);
  metrics->add_option("--edge-faults", config.edge_faults)->check(CLI::NonNegativeNumber);

  CLI::App* check = app.add_subcommand("check", "Check fault-diameter bounds on a bundle");
  check->add_option("--bundle", config.bundle, "Bundle expression")->required();
  check->add_option("--theorem", config.theorem,
                    "vfd-improved, efd-improved, vfd-plus-one, efd-plus-one, mixed-conn, mixed-fd, diam-decomp or all");
  check->add_option("--a", config.a, "Fibre fault count")->check(CLI::NonNegativeNumber);
  check->add_option("--b", config.b, "Base fault count")->check(CLI::NonNegativeNumber);
  check->add_option("--p", config.p, "Vertex faults for mixed-fd")->check(CLI::NonNegativeNumber);
  check->add_option("--q", config.q, "Edge faults for mixed-fd")->check(CLI::NonNegativeNumber);
  check->add_option("--side", config.side, "fibre or base, for mixed-fd");
  check->add_option("--pF", config.p_fibre)->check(CLI::NonNegativeNumber);
  check->add_option("--qF", config.q_fibre)->check(CLI::NonNegativeNumber);
  check->add_option("--pB", config.p_base)->check(CLI::NonNegativeNumber);
  check->add_option("--qB", config.q_base)->check(CLI::NonNegativeNumber);

  CLI::App* route = app.add_subcommand("route", "Route between two vertices around faults");
  route->add_option("--bundle", config.bundle, "Bundle expression")->required();
  route->add_option("--fault-vertices", fault_vertices, "Comma-separated faulty vertices");
  route->add_option("--fault-edges", fault_edges, "Comma-separated faulty edges u-v");
  route->add_option("--from", config.from)->required()->check(CLI::NonNegativeNumber);
  route->add_option("--to", config.to)->required()->check(CLI::NonNegativeNumber);
  route->add_option("--a", config.a)->check(CLI::NonNegativeNumber);
  route->add_option("--b", config.b)->check(CLI::NonNegativeNumber);

  CLI::App* search = app.add_subcommand("search", "Search for graphs where kappa and lambda do not decide (1,1)+connectivity");
  search->add_flag("--mixed-connectivity-gap", config.mixed_connectivity_gap);
  search->add_option("--max-vertices", config.max_vertices)->check(CLI::Range(4, 11));
  search->add_option("--seed", config.seed);

  CLI::App* report = app.add_subcommand("report", "Twisted torus report over every automorphism of C_n");
  report->add_flag("--twisted-torus", "Select the twisted torus report (the only report)");
  report->add_option("--n", config.torus_order, "Cycle length")->check(CLI::Range(3, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    for (std::stringstream s(fault_vertices); s.good();) {
      std::string token;
      std::getline(s, token, ',');
      if (!token.empty()) config.fault_vertices.push_back(std::stoi(token));
    }
    for (std::stringstream s(fault_edges); s.good();) {
      std::string token;
      std::getline(s, token, ',');
      if (!token.empty()) config.fault_edges.push_back(parse_edge_token(token));
    }
  } catch (const std::exception& e) {
    err << "error: bad fault list: " << e.what() << '\n';
    return kUsageError;
  }

  if (gen->parsed()) config.command = Command::Gen;
  if (metrics->parsed()) config.command = Command::Metrics;
  if (check->parsed()) config.command = Command::Check;
  if (route->parsed()) config.command = Command::Route;
  if (search->parsed()) config.command = Command::Search;
  if (report->parsed()) config.command = Command::Report;
  return run(config, out, err);
}

}  // namespace bundlefd::cli
