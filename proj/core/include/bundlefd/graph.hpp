#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "bundlefd/distance.hpp"
#include "bundlefd/errors.hpp"

namespace bundlefd {

/// Dense vertex identifier in [0, n).
using Vertex = int;

/// Undirected edge stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool has_endpoint(Vertex w) const { return u == w || v == w; }
  constexpr Vertex other(Vertex w) const { return w == u ? v : u; }

  constexpr auto operator<=>(const Edge&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

/// Simple undirected graph. Immutable after construction.
///
/// Edges are kept sorted in canonical order; the position of an edge in
/// edges() is its edge id. Neighbour lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidGraph on loops, duplicates or out-of-range endpoints.
  Graph(int order, std::vector<Edge> edges);

  int order() const { return order_; }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_[id]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const std::size_t> incident_edges(Vertex v) const {
    return {incident_.data() + offsets_[v], incident_.data() + offsets_[v + 1]};
  }

  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  int min_degree() const;

  bool contains(Vertex v) const { return v >= 0 && v < order_; }
  bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }
  std::optional<std::size_t> edge_id(Vertex a, Vertex b) const;

  bool is_complete() const {
    return size() == static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_ > 0 ? order_ - 1 : 0) / 2;
  }

  bool operator==(const Graph& other) const {
    return order_ == other.order_ && edges_ == other.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbors_;
  std::vector<std::size_t> incident_;
};

/// FNV-1a digest of the canonical edge list; stable across runs and platforms.
std::uint64_t fingerprint(const Graph& g);

/// Vertex and edge faults. Both lists are kept sorted and duplicate-free.
///
/// An edge fault may share an endpoint with a vertex fault.
struct FaultSet {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  FaultSet() = default;
  FaultSet(std::vector<Vertex> vs, std::vector<Edge> es);

  bool empty() const { return vertices.empty() && edges.empty(); }
  bool contains(Vertex v) const;
  bool contains(const Edge& e) const;

  /// Throws InvalidFaultSet if any element is missing from g.
  void validate(const Graph& g) const;

  bool operator==(const FaultSet&) const = default;
};

std::ostream& operator<<(std::ostream& os, const FaultSet& fs);

/// Alternating vertex/edge sequence v0 e1 v1 ... ek vk, stored by its vertices.
struct PathSeq {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  std::vector<Edge> edges() const;
  PathSeq reversed() const;

  bool operator==(const PathSeq&) const = default;
};

std::ostream& operator<<(std::ostream& os, const PathSeq& p);

/// True if p is nonempty, has distinct vertices and consecutive vertices are adjacent in g.
bool is_path(const Graph& g, const PathSeq& p);

/// True if no vertex or edge of p lies in fs.
bool avoids(const PathSeq& p, const FaultSet& fs);

/// Subgraph of (V, E \ X_E) induced on V \ X_V. Surviving vertices are
/// renumbered in ascending order; `kept`, if given, receives the old ids.
Graph delete_elements(const Graph& g, const FaultSet& fs, std::vector<Vertex>* kept = nullptr);

/// Subgraph induced on `vertices` (renumbered in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// BFS distances from s; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex s);

Distance distance(const Graph& g, Vertex u, Vertex v);

/// Maximum distance over all pairs. Graphs with fewer than two vertices are
/// disconnected by convention, so K1 has infinite diameter.
Distance diameter(const Graph& g);

bool is_connected(const Graph& g);

/// Breadth-first shortest path from s to t with neighbours visited in
/// ascending order. `vertex_ok(v)` and `edge_ok(edge_id)` restrict the search;
/// s and t themselves are always admitted.
template <class VertexOk, class EdgeOk>
std::optional<PathSeq> shortest_path(const Graph& g, Vertex s, Vertex t, VertexOk&& vertex_ok,
                                     EdgeOk&& edge_ok) {
  if (!g.contains(s) || !g.contains(t)) throw InvalidArgument("shortest_path: unknown vertex");
  if (s == t) return PathSeq{{s}};
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  parent[s] = s;
  std::deque<Vertex> queue{s};
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    const auto nbrs = g.neighbors(u);
    const auto ids = g.incident_edges(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex w = nbrs[i];
      if (parent[w] != -1 || !edge_ok(ids[i])) continue;
      if (w != t && !vertex_ok(w)) continue;
      parent[w] = u;
      if (w == t) {
        PathSeq path;
        for (Vertex c = t; c != s; c = parent[c]) path.vertices.push_back(c);
        path.vertices.push_back(s);
        return path.reversed();
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

inline std::optional<PathSeq> shortest_path(const Graph& g, Vertex s, Vertex t) {
  return shortest_path(g, s, t, [](Vertex) { return true; }, [](std::size_t) { return true; });
}

}  // namespace bundlefd
