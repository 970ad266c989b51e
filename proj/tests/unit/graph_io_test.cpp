#include <doctest.h>

#include <sstream>

#include <bundlefd/generators.hpp>
#include <bundlefd/graph_io.hpp>

using namespace bundlefd;

TEST_SUITE("graph_io") {
  TEST_CASE("edge lists round-trip") {
    const Graph g = hypercube(3);
    CHECK(parse_edge_list(to_edge_list(g)) == g);
    std::stringstream s;
    write_edge_list(s, g);
    CHECK(read_edge_list(s) == g);
  }

  TEST_CASE("comments and blank lines are skipped") {
    const Graph g = parse_edge_list("# triangle\n\nn 3\n0 1\n# middle\n1 2\n2 0\n");
    CHECK(g == cycle_graph(3));
  }

  TEST_CASE("errors carry line and column") {
    auto error_at = [](const char* text) -> std::pair<std::size_t, std::size_t> {
      try {
        parse_edge_list(text);
      } catch (const ParseError& e) {
        return {e.line(), e.column()};
      }
      return {0, 0};
    };
    CHECK(error_at("n 3\n0 1\n1 1\n") == std::pair<std::size_t, std::size_t>{3, 1});
    CHECK(error_at("n 3\n0 1\n  1 x\n") == std::pair<std::size_t, std::size_t>{3, 5});
    CHECK(error_at("n 3\n0 1\n1 0\n").first == 3);
    CHECK(error_at("n 3\n0 5\n").first == 2);
    CHECK(error_at("3\n").first == 1);
    CHECK(error_at("").first == 1);
  }
}
