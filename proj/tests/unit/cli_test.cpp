#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <bundlefd/fault_metrics.hpp>
#include <bundlefd/generators.hpp>
#include <bundlefd/graph_io.hpp>
#include <bundlefd_cli/cli.hpp>
#include <bundlefd_cli/spec_language.hpp>

using namespace bundlefd;
using namespace bundlefd::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bundlefd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t parse_error_column(std::string_view text) {
  try {
    parse_bundle_spec(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("named graphs") {
    CHECK(parse_graph_spec("C5") == cycle_graph(5));
    CHECK(parse_graph_spec("K4-e") == complete_minus_edge(4));
    CHECK(parse_graph_spec("Q3") == hypercube(3));
    CHECK(parse_graph_spec("P3") == path_graph(3));
    const std::vector<int> jumps{1, 4};
    CHECK(parse_graph_spec("circulant(16,[1,4])") == circulant(16, jumps));
    CHECK(parse_graph_spec(" product( C4 , K2 ) ") == cartesian_product(cycle_graph(4), complete_graph(2)));
  }

  TEST_CASE("bundles and twists") {
    const Bundle t = parse_bundle_spec("torus(4,rot1)");
    CHECK(t.twist(3, 0) == cycle_rotation(4, 1));
    CHECK(parse_bundle_spec("bundle(C4,C4,refl1)").twist(3, 0) == cycle_reflection(4, 1));
    CHECK(parse_bundle_spec("bundle(C4,C4,[1,2,3,0]@0-1)").twist(0, 1) == cycle_rotation(4, 1));
    CHECK(parse_bundle_spec("bundle(C4,C4,[1,2,3,0]@0-1)").twist(3, 0).is_identity());
    CHECK(parse_bundle_spec("bundle(C4,C4,id)").total() == cartesian_product(cycle_graph(4), cycle_graph(4)));
    const Bundle base_first = parse_bundle_spec("product(C3,K2)");
    CHECK(base_first.base() == cycle_graph(3));
    CHECK(base_first.fibre() == complete_graph(2));
    const Bundle trivial = parse_bundle_spec("C5");
    CHECK(trivial.fibre().order() == 1);
    CHECK(trivial.total() == cycle_graph(5));
  }

  TEST_CASE("files") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto graph_file = dir / "bundlefd_cli_test.edges";
    std::ofstream(graph_file) << "n 3\n0 1\n1 2\n";
    CHECK(parse_graph_spec("file:" + graph_file.string()) == path_graph(3));
    const auto bundle_file = dir / "bundlefd_cli_test.bundle";
    std::ofstream(bundle_file) << to_bundle_text(twisted_torus(4, cycle_rotation(4, 1)));
    CHECK(parse_bundle_spec("file:" + bundle_file.string()).total() ==
          twisted_torus(4, cycle_rotation(4, 1)).total());
    CHECK_THROWS_AS(parse_graph_spec("file:/nonexistent/bundlefd"), Error);
  }

  TEST_CASE("syntax errors point at the offending column") {
    CHECK(parse_error_column("C4(") == 4);
    CHECK(parse_error_column("product(C4,)") == 12);
    CHECK(parse_error_column("torus(4,rot)") == 9);
    CHECK(parse_error_column("Z9") == 1);
    CHECK(parse_error_column("torus(4,rot1) x") == 15);
    CHECK_THROWS_AS(parse_bundle_spec("bundle(C4,C4,[0,2,1,3])"), Error);
  }

  TEST_CASE("exit codes") {
    const Outcome ok = invoke({"check", "--bundle", "product(K4-e,K4-e)", "--theorem", "vfd-improved", "--a", "1",
                               "--b", "1"});
    CHECK(ok.code == kSuccess);
    CHECK(ok.out.find("lhs=4\n") != std::string::npos);
    CHECK(ok.out.find("rhs=4\n") != std::string::npos);
    CHECK(ok.out.find("fingerprint=3edd71b07bd78633") != std::string::npos);

    CHECK(invoke({"check", "--bundle", "torus(4,rot1)", "--theorem", "vfd-improved"}).code == kHypothesisUnmet);
    CHECK(invoke({"metrics", "--graph", "C4("}).code == kUsageError);
    CHECK(invoke({"metrics"}).code == kUsageError);
    CHECK(invoke({"frobnicate"}).code == kUsageError);
    CHECK(invoke({"metrics", "--graph", "C4", "--vertex-faults", "-1"}).code == kUsageError);
    CHECK(invoke({"--budget", "3", "metrics", "--graph", "Q3", "--vertex-faults", "2"}).code == kUsageError);
  }

  TEST_CASE("metrics output") {
    const Outcome r = invoke({"metrics", "--graph", "C4", "--vertex-faults", "1", "--edge-faults", "0"});
    CHECK(r.code == kSuccess);
    CHECK(r.out.find("value          2\n") != std::string::npos);
    const Outcome j = invoke({"--json", "metrics", "--graph", "C4", "--edge-faults", "1"});
    CHECK(j.code == kSuccess);
    CHECK(j.out.find("\"value\": 3") != std::string::npos);
  }

  TEST_CASE("budget from the environment") {
    ::setenv("BUNDLEFD_BUDGET", "7", 1);
    CHECK(default_budget() == 7);
    CHECK(invoke({"metrics", "--graph", "Q3", "--vertex-faults", "2"}).code == kUsageError);
    ::setenv("BUNDLEFD_BUDGET", "garbage", 1);
    CHECK(default_budget() == EnumerationOptions{}.budget);
    ::unsetenv("BUNDLEFD_BUDGET");
    CHECK(invoke({"metrics", "--graph", "Q3", "--vertex-faults", "2"}).code == kSuccess);
  }

  TEST_CASE("route with refused hypotheses falls back to the oracle") {
    const Outcome r = invoke({"route", "--bundle", "torus(4,rot1)", "--fault-vertices", "1,2,3", "--from", "0",
                              "--to", "5"});
    CHECK(r.code == kHypothesisUnmet);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.find("oracle_length") != std::string::npos);

    const Outcome e = invoke({"route", "--bundle", "product(C4,C4)", "--fault-edges", "0-1", "--from", "0", "--to",
                              "1", "--a", "0", "--b", "0"});
    CHECK(e.code == kSuccess);
    CHECK(e.out.find("SAME_FIBRE_MANY_FAULTS") != std::string::npos);
  }

  TEST_CASE("reports are deterministic") {
    const std::vector<std::string> args{"--threads", "3", "check", "--bundle", "torus(4,refl1)", "--theorem", "all"};
    const Outcome first = invoke(args);
    const Outcome second = invoke(args);
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
    CHECK(first.code != kViolated);
  }

  TEST_CASE("gen writes files that read back") {
    const auto path = std::filesystem::temp_directory_path() / "bundlefd_gen_test.bundle";
    CHECK(invoke({"gen", "--bundle", "torus(4,refl2)", "-o", path.string()}).code == kSuccess);
    CHECK(parse_bundle_spec("file:" + path.string()).total() == twisted_torus(4, cycle_reflection(4, 2)).total());
    const Outcome g = invoke({"gen", "--graph", "K4-e"});
    CHECK(parse_edge_list(g.out) == complete_minus_edge(4));
  }

  TEST_CASE("twisted torus report") {
    const auto rows = twisted_torus_report(4);
    REQUIRE(rows.size() == 8);
    int matches = 0;
    for (const auto& row : rows) matches += row.matches_example() ? 1 : 0;
    CHECK(matches == 7);
    auto row_named = [&](std::string_view name) {
      const auto it = std::find_if(rows.begin(), rows.end(), [&](const TwistRow& r) { return r.name == name; });
      REQUIRE(it != rows.end());
      return *it;
    };
    CHECK(row_named("rot0").diameter == Distance(4));
    CHECK(row_named("rot0").decomposition_equality);
    CHECK(row_named("rot1").diameter == Distance(3));
    CHECK_FALSE(row_named("rot1").decomposition_equality);
    CHECK(row_named("rot2").vertex_fd3 == Distance(4));
    CHECK_FALSE(row_named("rot2").matches_example());
  }
}
