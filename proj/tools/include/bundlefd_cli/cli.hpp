#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <bundlefd/bounds.hpp>
#include <bundlefd/bundle.hpp>
#include <bundlefd/enumeration.hpp>
#include <bundlefd/graph.hpp>

namespace bundlefd::cli {

enum class Command { Gen, Metrics, Check, Route, Search, Report };

/// Exit codes of run().
enum ExitCode : int {
  kSuccess = 0,
  kViolated = 1,
  kHypothesisUnmet = 2,
  kUsageError = 3,
};

struct RunConfig {
  Command command = Command::Metrics;

  std::string graph;   // graph expression or file:path
  std::string bundle;  // bundle expression or file:path
  std::string output;  // gen target; empty writes to stdout

  // metrics
  int vertex_faults = 0;
  int edge_faults = 0;

  // check
  std::string theorem = "all";
  int a = 1;
  int b = 1;
  int p = 0;
  int q = 1;
  std::string side = "fibre";
  int p_fibre = 1;
  int q_fibre = 0;
  int p_base = 1;
  int q_base = 0;

  // route
  std::vector<Vertex> fault_vertices;
  std::vector<Edge> fault_edges;
  Vertex from = 0;
  Vertex to = 1;

  // search
  bool mixed_connectivity_gap = true;
  int max_vertices = 8;
  std::uint64_t seed = 1;

  // report
  int torus_order = 4;

  EnumerationOptions enumeration;
  bool json = false;
};

/// Executes one command. Human-readable output goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs. Usage errors return kUsageError.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Budget from BUNDLEFD_BUDGET if set and valid, otherwise the library default.
std::uint64_t default_budget();

/// One twist of the C_n over C_n torus and its measured quantities.
struct TwistRow {
  std::string name;  // rotK or reflK
  Automorphism twist = Automorphism::identity(0);
  std::uint64_t fingerprint = 0;
  Distance diameter;
  Distance vertex_fd1;
  Distance edge_fd1;
  Distance vertex_fd3;
  FaultSet vertex_fd3_witness;
  bool decomposition_equality = false;  // D^V_1 = D^E_1 = D = D(F) + D(B)
  Verdict baseline_vertex = Verdict::HypothesisUnmet;
  Verdict improved_vertex = Verdict::HypothesisUnmet;
  bool matches_example() const;  // D^V_3 = 5 with the +1 bound tight
};

/// All automorphisms of C_n as the single twist on the base edge (n-1, 0).
std::vector<TwistRow> twisted_torus_report(int n, const EnumerationOptions& options = {});

/// Graphs with κ = 2 and λ = 3 on at most max_vertices vertices, one of which
/// is not (1,1)+connected and one of which is.
struct GapSearchResult {
  std::optional<Graph> not_mixed_connected;
  std::optional<Graph> mixed_connected;
  std::uint64_t graphs_examined = 0;
};

/// Exhaustive over labelled graphs up to seven vertices, seeded random
/// sampling beyond that.
GapSearchResult search_mixed_connectivity_gap(int max_vertices, std::uint64_t seed);

}  // namespace bundlefd::cli
