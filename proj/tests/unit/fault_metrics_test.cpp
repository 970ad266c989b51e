#include <doctest.h>

#include <random>

#include <bundlefd/bundle.hpp>
#include <bundlefd/connectivity.hpp>
#include <bundlefd/fault_metrics.hpp>
#include <bundlefd/generators.hpp>
#include <bundlefd/graph_io.hpp>

#include "brute_force.hpp"
#include "random_bundles.hpp"

using namespace bundlefd;
using namespace bundlefd::testing;

namespace {

Distance d(std::int64_t v) { return Distance(v); }
const Distance kInf = Distance::infinite();

Graph square(const Graph& g) { return cartesian_product(g, g); }

void check_witness(const Graph& g, const FaultDiameterResult& r, int p, int q) {
  CHECK(static_cast<int>(r.witness.vertices.size()) == p);
  CHECK(static_cast<int>(r.witness.edges.size()) == q);
  CHECK_NOTHROW(r.witness.validate(g));
  std::vector<Vertex> kept;
  const Graph h = delete_elements(g, r.witness, &kept);
  CHECK(diameter(h) == r.value);
  if (r.witness_pair) {
    const auto [u, v] = *r.witness_pair;
    CHECK_FALSE(r.witness.contains(u));
    CHECK_FALSE(r.witness.contains(v));
    const auto iu = std::lower_bound(kept.begin(), kept.end(), u) - kept.begin();
    const auto iv = std::lower_bound(kept.begin(), kept.end(), v) - kept.begin();
    CHECK(distance(h, static_cast<Vertex>(iu), static_cast<Vertex>(iv)) == r.value);
  }
}

}  // namespace

TEST_SUITE("fault_metrics") {
  TEST_CASE("small graphs") {
    const Graph k4e = complete_minus_edge(4);
    CHECK(vertex_fault_diameter(k4e, 1).value == d(2));
    CHECK(edge_fault_diameter(k4e, 1).value == d(2));
    CHECK(mixed_fault_diameter(k4e, 0, 1).value == d(2));
    CHECK(mixed_fault_diameter(k4e, 1, 1).value == kInf);

    const Graph c4 = cycle_graph(4);
    CHECK(vertex_fault_diameter(c4, 1).value == d(2));
    CHECK(edge_fault_diameter(c4, 1).value == d(3));
    CHECK(mixed_fault_diameter(c4, 0, 1).value == d(3));
    CHECK(mixed_fault_diameter(c4, 1, 1).value == kInf);

    const Graph k4 = complete_graph(4);
    CHECK(vertex_fault_diameter(k4, 1).value == d(1));
    CHECK(edge_fault_diameter(k4, 1).value == d(2));
    CHECK(edge_fault_diameter(k4, 0).value == d(1));
    CHECK(vertex_fault_diameter(k4, 3).value == kInf);
  }

  TEST_CASE("one vertex fault and one edge fault relate on small graphs") {
    for (const Graph& g : {cycle_graph(4), cycle_graph(5), complete_graph(4), complete_graph(5)}) {
      CHECK(vertex_fault_diameter(g, 1).value + d(1) == mixed_fault_diameter(g, 0, 1).value);
    }
  }

  TEST_CASE("products and tori") {
    const Graph k4e2 = square(complete_minus_edge(4));
    CHECK(k4e2.size() == 40);
    CHECK(diameter(k4e2) == d(4));
    CHECK(vertex_fault_diameter(k4e2, 1).value == d(4));
    CHECK(edge_fault_diameter(k4e2, 1).value == d(4));
    CHECK(vertex_fault_diameter(k4e2, 3).value == d(4));
    CHECK(edge_fault_diameter(k4e2, 3).value == d(4));

    const Graph k4sq = square(complete_graph(4));
    CHECK(vertex_fault_diameter(k4sq, 3).value == d(3));
    CHECK(edge_fault_diameter(k4sq, 1).value == d(2));

    const Graph c4sq = square(cycle_graph(4));
    CHECK(edge_fault_diameter(c4sq, 1).value == d(4));
    CHECK(vertex_fault_diameter(c4sq, 1).value == d(4));
    CHECK(vertex_fault_diameter(c4sq, 2).value == d(4));
  }

  TEST_CASE("twisted tori") {
    struct Row {
      bool rotation;
      int k;
      int d, dv1, de1, dv3, de3, d11;
    };
    const Row rows[] = {
        {true, 0, 4, 4, 4, 5, 5, 4},  {true, 1, 3, 3, 3, 5, 4, 4},  {true, 2, 3, 4, 4, 4, 5, 4},
        {true, 3, 3, 3, 3, 5, 4, 4},  {false, 0, 4, 4, 4, 5, 5, 4}, {false, 1, 3, 3, 3, 5, 4, 4},
        {false, 2, 4, 4, 4, 5, 5, 4}, {false, 3, 3, 3, 3, 5, 4, 4},
    };
    for (const Row& r : rows) {
      const Bundle b = twisted_torus(4, r.rotation ? cycle_rotation(4, r.k) : cycle_reflection(4, r.k));
      const Graph& g = b.total();
      CAPTURE(r.rotation);
      CAPTURE(r.k);
      CHECK(diameter(g) == d(r.d));
      CHECK(vertex_fault_diameter(g, 1).value == d(r.dv1));
      CHECK(edge_fault_diameter(g, 1).value == d(r.de1));
      CHECK(vertex_fault_diameter(g, 3).value == d(r.dv3));
      CHECK(edge_fault_diameter(g, 3).value == d(r.de3));
      CHECK(mixed_fault_diameter(g, 1, 1).value == d(r.d11));
    }
  }

  TEST_CASE("exhaustive engine matches the naive reference") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = random_connected_graph(rng, 4 + trial % 5, 0.5);
      for (int p = 0; p <= 2; ++p) {
        for (int q = 0; q <= 2; ++q) {
          if (p > g.order() || q > static_cast<int>(g.size())) continue;
          CAPTURE(to_edge_list(g));
          CAPTURE(p);
          CAPTURE(q);
          const auto fast = mixed_fault_diameter(g, p, q);
          const auto slow = naive_mixed_fd(g, p, q);
          CHECK(fast.value == slow.value);
          if (!fast.value.is_infinite()) {
            CHECK(fast.witness.vertices == slow.witness.vertices);
            CHECK(fast.witness.edges == slow.witness.edges);
          }
          check_witness(g, fast, p, q);
        }
      }
    }
  }

  TEST_CASE("witnesses on random bundles") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
      const RandomBundle rb = random_bundle(rng, 20);
      CAPTURE(rb.description);
      const Graph& g = rb.bundle.total();
      for (int p = 0; p <= 2; ++p) check_witness(g, mixed_fault_diameter(g, p, 2 - p), p, 2 - p);
    }
  }

  TEST_CASE("infinite values come with a disconnecting witness") {
    const Graph c6 = cycle_graph(6);
    const auto r = mixed_fault_diameter(c6, 2, 0);
    CHECK(r.value == kInf);
    CHECK(r.evaluated == 0);
    check_witness(c6, r, 2, 0);
    const auto s = mixed_fault_diameter(c6, 1, 1);
    CHECK(s.value == kInf);
    check_witness(c6, s, 1, 1);
    const auto t = mixed_fault_diameter(complete_graph(3), 2, 0);
    CHECK(t.value == kInf);
    CHECK_FALSE(t.witness_pair.has_value());
  }

  TEST_CASE("results do not depend on the thread count") {
    const Bundle b = twisted_torus(4, cycle_reflection(4, 1));
    EnumerationOptions one;
    one.threads = 1;
    EnumerationOptions four;
    four.threads = 4;
    for (int p = 0; p <= 2; ++p) {
      const auto a = mixed_fault_diameter(b.total(), p, 2 - p, one);
      const auto c = mixed_fault_diameter(b.total(), p, 2 - p, four);
      CHECK(a.value == c.value);
      CHECK(a.witness.vertices == c.witness.vertices);
      CHECK(a.witness.edges == c.witness.edges);
      CHECK(a.witness_pair == c.witness_pair);
      CHECK(a.evaluated == c.evaluated);
    }
  }

  TEST_CASE("budget and domain errors") {
    EnumerationOptions tight;
    tight.budget = 100;
    CHECK_THROWS_AS(vertex_fault_diameter(hypercube(4), 3, tight), BudgetExceeded);
    try {
      vertex_fault_diameter(hypercube(4), 3, tight);
    } catch (const BudgetExceeded& e) {
      CHECK(e.required() == binomial(16, 3));
      CHECK(e.budget() == 100);
    }
    CHECK_THROWS_AS(vertex_fault_diameter(cycle_graph(4), 5), InvalidArgument);
    CHECK_THROWS_AS(edge_fault_diameter(cycle_graph(4), 5), InvalidArgument);
    CHECK_THROWS_AS(mixed_fault_diameter(cycle_graph(4), -1, 0), InvalidArgument);
  }

  TEST_CASE("two-stage decomposition") {
    CHECK(two_stage_decomposition_check(complete_minus_edge(4), 1, 0));
    CHECK(two_stage_decomposition_check(complete_minus_edge(4), 0, 1));
    CHECK(two_stage_decomposition_check(square(cycle_graph(4)), 1, 1));
    CHECK(two_stage_decomposition_check(hypercube(3), 1, 1));
    CHECK_THROWS_AS(two_stage_decomposition_check(cycle_graph(4), 1, 1), HypothesisUnmet);
  }
}
