#include "bundlefd/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace bundlefd {

std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << e.u << '-' << e.v; }

Graph::Graph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  if (order < 0) throw InvalidGraph("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw InvalidGraph("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= order_) {
      std::ostringstream os;
      os << "edge " << e << " out of range for " << order_ << " vertices";
      throw InvalidGraph(os.str());
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    std::ostringstream os;
    os << "duplicate edge " << *dup;
    throw InvalidGraph(os.str());
  }

  std::vector<std::vector<std::pair<Vertex, std::size_t>>> rows(static_cast<std::size_t>(order_));
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    rows[edges_[id].u].emplace_back(edges_[id].v, id);
    rows[edges_[id].v].emplace_back(edges_[id].u, id);
  }
  offsets_.assign(static_cast<std::size_t>(order_) + 1, 0);
  neighbors_.reserve(2 * edges_.size());
  incident_.reserve(2 * edges_.size());
  for (int v = 0; v < order_; ++v) {
    auto& row = rows[v];
    std::sort(row.begin(), row.end());
    for (const auto& [w, id] : row) {
      neighbors_.push_back(w);
      incident_.push_back(id);
    }
    offsets_[v + 1] = neighbors_.size();
  }
}

int Graph::min_degree() const {
  if (order_ == 0) return 0;
  int best = degree(0);
  for (Vertex v = 1; v < order_; ++v) best = std::min(best, degree(v));
  return best;
}

std::optional<std::size_t> Graph::edge_id(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b) || a == b) return std::nullopt;
  const auto nbrs = neighbors(a);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - nbrs.begin())];
}

std::uint64_t fingerprint(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      h ^= (word >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.order()));
  for (const Edge& e : g.edges()) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  return h;
}

FaultSet::FaultSet(std::vector<Vertex> vs, std::vector<Edge> es)
    : vertices(std::move(vs)), edges(std::move(es)) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool FaultSet::contains(Vertex v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool FaultSet::contains(const Edge& e) const { return std::binary_search(edges.begin(), edges.end(), e); }

void FaultSet::validate(const Graph& g) const {
  for (Vertex v : vertices) {
    if (!g.contains(v)) throw InvalidFaultSet("fault vertex " + std::to_string(v) + " not in graph");
  }
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) {
      std::ostringstream os;
      os << "fault edge " << e << " not in graph";
      throw InvalidFaultSet(os.str());
    }
  }
}

std::ostream& operator<<(std::ostream& os, const FaultSet& fs) {
  os << "{V:";
  for (std::size_t i = 0; i < fs.vertices.size(); ++i) os << (i ? "," : "") << fs.vertices[i];
  os << " E:";
  for (std::size_t i = 0; i < fs.edges.size(); ++i) os << (i ? "," : "") << fs.edges[i];
  return os << '}';
}

std::vector<Edge> PathSeq::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < vertices.size(); ++i) out.emplace_back(vertices[i - 1], vertices[i]);
  return out;
}

PathSeq PathSeq::reversed() const { return PathSeq{{vertices.rbegin(), vertices.rend()}}; }

std::ostream& operator<<(std::ostream& os, const PathSeq& p) {
  for (std::size_t i = 0; i < p.vertices.size(); ++i) os << (i ? " " : "") << p.vertices[i];
  return os;
}

bool is_path(const Graph& g, const PathSeq& p) {
  if (p.vertices.empty()) return false;
  std::unordered_set<Vertex> seen;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Vertex v = p.vertices[i];
    if (!g.contains(v) || !seen.insert(v).second) return false;
    if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool avoids(const PathSeq& p, const FaultSet& fs) {
  for (Vertex v : p.vertices) {
    if (fs.contains(v)) return false;
  }
  for (const Edge& e : p.edges()) {
    if (fs.contains(e)) return false;
  }
  return true;
}

Graph delete_elements(const Graph& g, const FaultSet& fs, std::vector<Vertex>* kept) {
  fs.validate(g);
  std::vector<Vertex> relabel(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> survivors;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!fs.contains(v)) {
      relabel[v] = static_cast<Vertex>(survivors.size());
      survivors.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] < 0 || relabel[e.v] < 0 || fs.contains(e)) continue;
    edges.emplace_back(relabel[e.u], relabel[e.v]);
  }
  if (kept) *kept = survivors;
  return Graph(static_cast<int>(survivors.size()), std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> relabel(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!g.contains(vertices[i])) throw InvalidArgument("induced_subgraph: unknown vertex");
    relabel[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] >= 0 && relabel[e.v] >= 0) edges.emplace_back(relabel[e.u], relabel[e.v]);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

std::vector<int> bfs_distances(const Graph& g, Vertex s) {
  if (!g.contains(s)) throw InvalidArgument("bfs_distances: unknown vertex " + std::to_string(s));
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Distance distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(v)) throw InvalidArgument("distance: unknown vertex " + std::to_string(v));
  const int d = bfs_distances(g, u)[v];
  return d < 0 ? Distance::infinite() : Distance(d);
}

Distance diameter(const Graph& g) {
  if (g.order() < 2) return Distance::infinite();
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) return Distance::infinite();
      best = std::max(best, d);
    }
  }
  return Distance(best);
}

bool is_connected(const Graph& g) {
  if (g.order() < 2) return false;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

}  // namespace bundlefd
