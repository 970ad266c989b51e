#include "bundlefd/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bundlefd {

GeneratorId parse_generator_id(std::string_view name) {
  if (name == "cycle") return GeneratorId::Cycle;
  if (name == "complete") return GeneratorId::Complete;
  if (name == "complete_minus_edge") return GeneratorId::CompleteMinusEdge;
  if (name == "path") return GeneratorId::Path;
  if (name == "hypercube") return GeneratorId::Hypercube;
  if (name == "circulant") return GeneratorId::Circulant;
  throw InvalidArgument("unknown generator '" + std::string(name) + "'");
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

Graph complete_minus_edge(int n) {
  if (n < 2) throw InvalidArgument("complete_minus_edge needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (i != 0 || j != 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 1) throw InvalidArgument("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph hypercube(int d) {
  if (d < 0 || d > 20) throw InvalidArgument("hypercube needs 0 <= d <= 20");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < d; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph(n, std::move(edges));
}

Graph circulant(int n, std::span<const int> jumps) {
  if (n < 3) throw InvalidArgument("circulant needs n >= 3");
  if (jumps.empty()) throw InvalidArgument("circulant needs at least one jump");
  std::set<Edge> edges;
  for (int j : jumps) {
    if (j < 1 || j > n / 2) throw InvalidArgument("circulant jump " + std::to_string(j) + " outside [1, n/2]");
    for (int i = 0; i < n; ++i) edges.emplace(i, (i + j) % n);
  }
  return Graph(n, {edges.begin(), edges.end()});
}

Graph generate(GeneratorId id, std::span<const int> params) {
  auto single = [&](const char* family) {
    if (params.size() != 1) throw InvalidArgument(std::string(family) + " takes exactly one parameter");
    return params[0];
  };
  switch (id) {
    case GeneratorId::Cycle: return cycle_graph(single("cycle"));
    case GeneratorId::Complete: return complete_graph(single("complete"));
    case GeneratorId::CompleteMinusEdge: return complete_minus_edge(single("complete_minus_edge"));
    case GeneratorId::Path: return path_graph(single("path"));
    case GeneratorId::Hypercube: return hypercube(single("hypercube"));
    case GeneratorId::Circulant:
      if (params.size() < 2) throw InvalidArgument("circulant takes n followed by jumps");
      return circulant(params[0], params.subspan(1));
  }
  throw InvalidArgument("unknown generator");
}

}  // namespace bundlefd
