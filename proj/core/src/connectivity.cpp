#include "bundlefd/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "fault_engine.hpp"

namespace bundlefd {
namespace {

// Unit-capacity augmenting-path max-flow on a small directed network.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  void add_arc(int from, int to, int capacity) {
    arcs_.push_back({to, capacity, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  /// Max flow from s to t, stopping once `limit` is reached.
  int max_flow(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{s};
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        const int u = queue.front();
        queue.pop_front();
        for (int a = head_[u]; a != -1; a = arcs_[a].next) {
          if (arcs_[a].capacity > 0 && via[arcs_[a].to] == -1) {
            via[arcs_[a].to] = a;
            queue.push_back(arcs_[a].to);
          }
        }
      }
      if (via[t] == -1) break;
      for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        --arcs_[via[v]].capacity;
        ++arcs_[via[v] ^ 1].capacity;
      }
      ++flow;
    }
    return flow;
  }

  /// Nodes reachable from s in the residual network.
  std::vector<bool> residual_reach(int s) const {
    std::vector<bool> seen(head_.size(), false);
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int a = head_[u]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].capacity > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = true;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int capacity;
    int next;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

// Vertex v splits into in-node 2v and out-node 2v+1 joined by a unit arc.
FlowNetwork split_network(const Graph& g, Vertex s, Vertex t) {
  FlowNetwork net(2 * g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? kUnbounded : 1);
  }
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, kUnbounded);
    net.add_arc(2 * e.v + 1, 2 * e.u, kUnbounded);
  }
  return net;
}

FlowNetwork edge_network(const Graph& g) {
  FlowNetwork net(g.order());
  for (const Edge& e : g.edges()) {
    net.add_arc(e.u, e.v, 1);
    net.add_arc(e.v, e.u, 1);
  }
  return net;
}

}  // namespace

std::vector<Vertex> minimum_vertex_cut(const Graph& g) {
  if (!is_connected(g) || g.is_complete()) return {};
  int best = g.order();
  std::pair<Vertex, Vertex> best_pair{-1, -1};
  for (Vertex s = 0; s < g.order(); ++s) {
    for (Vertex t = s + 1; t < g.order(); ++t) {
      if (g.has_edge(s, t)) continue;
      FlowNetwork net = split_network(g, s, t);
      const int flow = net.max_flow(2 * s + 1, 2 * t, best);
      if (flow < best) {
        best = flow;
        best_pair = {s, t};
      }
    }
  }
  FlowNetwork net = split_network(g, best_pair.first, best_pair.second);
  net.max_flow(2 * best_pair.first + 1, 2 * best_pair.second, kUnbounded);
  const auto reach = net.residual_reach(2 * best_pair.first + 1);
  std::vector<Vertex> cut;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
  }
  return cut;
}

int vertex_connectivity(const Graph& g) {
  if (!is_connected(g)) return 0;
  if (g.is_complete()) return g.order() - 1;
  return static_cast<int>(minimum_vertex_cut(g).size());
}

std::vector<Edge> minimum_edge_cut(const Graph& g) {
  if (!is_connected(g)) return {};
  int best = static_cast<int>(g.size()) + 1;
  Vertex best_t = -1;
  for (Vertex t = 1; t < g.order(); ++t) {
    FlowNetwork net = edge_network(g);
    const int flow = net.max_flow(0, t, best);
    if (flow < best) {
      best = flow;
      best_t = t;
    }
  }
  FlowNetwork net = edge_network(g);
  net.max_flow(0, best_t, kUnbounded);
  const auto reach = net.residual_reach(0);
  std::vector<Edge> cut;
  for (const Edge& e : g.edges()) {
    if (reach[e.u] != reach[e.v]) cut.push_back(e);
  }
  return cut;
}

int edge_connectivity(const Graph& g) {
  if (!is_connected(g)) return 0;
  return static_cast<int>(minimum_edge_cut(g).size());
}

std::optional<FaultSet> find_disconnecting_set(const Graph& g, int p, int q, const EnumerationOptions& options) {
  if (p < 0 || q < 0) throw InvalidArgument("fault counts must be non-negative");
  const auto outcome = detail::maximise_over_fault_sets(
      g, p, q, options, [](detail::FaultEvaluator& ev) { return ev.disconnection(); });
  if (!outcome.any || outcome.value != detail::FaultEvaluator::kInfinite) return std::nullopt;
  auto [xs, ys] = detail::unrank_fault_set(g, p, q, outcome.rank);
  FaultSet fs;
  fs.vertices.assign(xs.current().begin(), xs.current().end());
  for (int id : ys.current()) fs.edges.push_back(g.edge(static_cast<std::size_t>(id)));
  return fs;
}

bool is_mixed_connected(const Graph& g, int p, int q, const EnumerationOptions& options) {
  if (g.order() < 2) throw InvalidArgument("mixed connectivity of K1 is not defined");
  if (p < 0 || q < 0) throw InvalidArgument("fault counts must be non-negative");
  if (!is_connected(g)) return false;
  if (p >= vertex_connectivity(g) || p + q >= edge_connectivity(g)) return false;
  return !find_disconnecting_set(g, p, q, options).has_value();
}

bool is_connectivity_pair(const Graph& g, int k, int l, const EnumerationOptions& options) {
  if (k < 0 || l < 0) throw InvalidArgument("connectivity pair entries must be non-negative");
  const bool below = l > 0 ? is_mixed_connected(g, k, l - 1, options)
                           : (k == 0 || is_mixed_connected(g, k - 1, 0, options));
  return below && !is_mixed_connected(g, k, l, options);
}

}  // namespace bundlefd
