#include "bundlefd/fault_metrics.hpp"

#include <algorithm>
#include <set>

#include "bundlefd/connectivity.hpp"
#include "fault_engine.hpp"

namespace bundlefd {
namespace {

bool disconnects(const Graph& g, const FaultSet& fs) { return !is_connected(delete_elements(g, fs)); }

void pad_edges(const Graph& g, std::vector<Edge>& edges, int q) {
  std::set<Edge> have(edges.begin(), edges.end());
  for (const Edge& e : g.edges()) {
    if (static_cast<int>(edges.size()) >= q) break;
    if (have.insert(e).second) edges.push_back(e);
  }
}

// Pads to p vertices, never touching the two anchors.
void pad_vertices(const Graph& g, std::vector<Vertex>& vertices, int p, Vertex a, Vertex b) {
  std::set<Vertex> have(vertices.begin(), vertices.end());
  for (Vertex v = 0; v < g.order() && static_cast<int>(vertices.size()) < p; ++v) {
    if (v != a && v != b && have.insert(v).second) vertices.push_back(v);
  }
}

// Vertices reachable from s while avoiding `blocked` vertices and `cut` edges.
std::vector<bool> reach_avoiding(const Graph& g, Vertex s, const std::set<Vertex>& blocked,
                                 const std::set<Edge>& cut) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<Vertex> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (seen[w] || blocked.count(w) || cut.count(Edge(u, w))) continue;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  return seen;
}

enum class Shortcut { NotApplicable, Witness, NeedsEnumeration };

// When G is known not to be (p,q)+connected, builds a disconnecting fault set
// with exactly p vertices and q edges from a minimum cut.
Shortcut cut_witness(const Graph& g, int p, int q, FaultSet& out) {
  const int n = g.order();
  std::vector<Vertex> xs;
  std::vector<Edge> ys;
  auto finish = [&]() {
    out = FaultSet(std::move(xs), std::move(ys));
    return disconnects(g, out) ? Shortcut::Witness : Shortcut::NeedsEnumeration;
  };

  if (n - p < 2) {
    pad_vertices(g, xs, p, -1, -1);
    pad_edges(g, ys, q);
    return finish();
  }
  if (!is_connected(g)) {
    const auto seen = reach_avoiding(g, 0, {}, {});
    const Vertex b = static_cast<Vertex>(std::find(seen.begin(), seen.end(), false) - seen.begin());
    pad_vertices(g, xs, p, 0, b);
    pad_edges(g, ys, q);
    return finish();
  }
  if (p >= vertex_connectivity(g)) {
    const auto cut = minimum_vertex_cut(g);
    const std::set<Vertex> blocked(cut.begin(), cut.end());
    Vertex a = 0;
    while (blocked.count(a)) ++a;
    const auto seen = reach_avoiding(g, a, blocked, {});
    Vertex b = 0;
    while (b < n && (seen[b] || blocked.count(b))) ++b;
    xs = cut;
    pad_vertices(g, xs, p, a, b);
    pad_edges(g, ys, q);
    return finish();
  }
  if (p + q < edge_connectivity(g)) return Shortcut::NotApplicable;

  const auto cut = minimum_edge_cut(g);
  std::set<Edge> remaining(cut.begin(), cut.end());
  const auto side = reach_avoiding(g, cut.front().u, {}, remaining);
  auto incident_to_cut = [&](Vertex v) {
    return std::any_of(remaining.begin(), remaining.end(), [v](const Edge& e) { return e.has_endpoint(v); });
  };
  // Each side keeps one anchor, preferably a vertex away from the cut.
  auto pick_anchor = [&](bool which) {
    Vertex fallback = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (side[v] != which) continue;
      if (!incident_to_cut(v)) return v;
      fallback = v;
    }
    return fallback;
  };
  const Vertex anchor_a = pick_anchor(true);
  const Vertex anchor_b = pick_anchor(false);
  for (bool which : {true, false}) {
    for (Vertex v = 0; v < n && static_cast<int>(xs.size()) < p; ++v) {
      if (side[v] != which || v == anchor_a || v == anchor_b || !incident_to_cut(v)) continue;
      xs.push_back(v);
      std::erase_if(remaining, [v](const Edge& e) { return e.has_endpoint(v); });
    }
  }
  if (static_cast<int>(remaining.size()) > q) return Shortcut::NeedsEnumeration;
  ys.assign(remaining.begin(), remaining.end());
  pad_vertices(g, xs, p, anchor_a, anchor_b);
  pad_edges(g, ys, q);
  return finish();
}

std::optional<std::pair<Vertex, Vertex>> find_witness_pair(const Graph& g, const FaultSet& fs, Distance value) {
  std::vector<Vertex> kept;
  const Graph h = delete_elements(g, fs, &kept);
  for (Vertex u = 0; u < h.order(); ++u) {
    const auto dist = bfs_distances(h, u);
    for (Vertex v = u + 1; v < h.order(); ++v) {
      const Distance d = dist[v] < 0 ? Distance::infinite() : Distance(dist[v]);
      if (d == value) return std::make_pair(kept[u], kept[v]);
    }
  }
  return std::nullopt;
}

}  // namespace

FaultDiameterResult mixed_fault_diameter(const Graph& g, int p, int q, const EnumerationOptions& options) {
  if (p < 0 || q < 0) throw InvalidArgument("fault counts must be non-negative");
  if (p > g.order()) throw InvalidArgument("cannot delete " + std::to_string(p) + " vertices from a graph with " +
                                           std::to_string(g.order()));
  if (q > static_cast<int>(g.size())) {
    throw InvalidArgument("cannot delete " + std::to_string(q) + " edges from a graph with " +
                          std::to_string(g.size()));
  }

  FaultDiameterResult result;
  FaultSet witness;
  switch (cut_witness(g, p, q, witness)) {
    case Shortcut::Witness:
      result.value = Distance::infinite();
      result.witness = std::move(witness);
      result.witness_pair = find_witness_pair(g, result.witness, result.value);
      return result;
    case Shortcut::NeedsEnumeration:
      if (auto found = find_disconnecting_set(g, p, q, options)) {
        result.value = Distance::infinite();
        result.witness = std::move(*found);
        result.witness_pair = find_witness_pair(g, result.witness, result.value);
        return result;
      }
      throw Error("internal: cut condition holds but no disconnecting fault set exists");
    case Shortcut::NotApplicable: break;
  }

  const auto outcome =
      detail::maximise_over_fault_sets(g, p, q, options, [](detail::FaultEvaluator& ev) { return ev.diameter(); });
  auto [xs, ys] = detail::unrank_fault_set(g, p, q, outcome.rank);
  result.witness.vertices.assign(xs.current().begin(), xs.current().end());
  for (int id : ys.current()) result.witness.edges.push_back(g.edge(static_cast<std::size_t>(id)));
  result.value = outcome.value == detail::FaultEvaluator::kInfinite ? Distance::infinite() : Distance(outcome.value);
  result.evaluated = outcome.evaluated;
  result.witness_pair = find_witness_pair(g, result.witness, result.value);
  return result;
}

FaultDiameterResult vertex_fault_diameter(const Graph& g, int a, const EnumerationOptions& options) {
  return mixed_fault_diameter(g, a, 0, options);
}

FaultDiameterResult edge_fault_diameter(const Graph& g, int a, const EnumerationOptions& options) {
  return mixed_fault_diameter(g, 0, a, options);
}

bool two_stage_decomposition_check(const Graph& g, int a, int b, const EnumerationOptions& options) {
  if (!is_mixed_connected(g, a, b, options)) {
    throw HypothesisUnmet("two-stage decomposition needs a (" + std::to_string(a) + "," + std::to_string(b) +
                          ")+connected graph");
  }
  const Distance target = mixed_fault_diameter(g, a, b, options).value;

  Distance via_vertices;
  for (Combination xs(g.order(), a); !xs.done(); xs.next()) {
    const FaultSet fs({xs.current().begin(), xs.current().end()}, {});
    via_vertices = std::max(via_vertices, edge_fault_diameter(delete_elements(g, fs), b, options).value);
  }
  Distance via_edges;
  for (Combination ys(static_cast<int>(g.size()), b); !ys.done(); ys.next()) {
    FaultSet fs;
    for (int id : ys.current()) fs.edges.push_back(g.edge(static_cast<std::size_t>(id)));
    via_edges = std::max(via_edges, vertex_fault_diameter(delete_elements(g, fs), a, options).value);
  }
  return via_vertices == target && via_edges == target;
}

}  // namespace bundlefd
