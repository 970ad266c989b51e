#include <random>

#include <bundlefd/connectivity.hpp>

#include "bundlefd_cli/cli.hpp"

namespace bundlefd::cli {
namespace {

Graph from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1U) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

bool min_degree_at_least(int n, std::uint64_t mask, int d) {
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1U) {
        ++degree[u];
        ++degree[v];
      }
    }
  }
  for (int x : degree) {
    if (x < d) return false;
  }
  return true;
}

/// Records g if it fills an empty slot; returns true once both slots are filled.
bool consider(const Graph& g, GapSearchResult& result) {
  ++result.graphs_examined;
  if (edge_connectivity(g) != 3 || vertex_connectivity(g) != 2) return false;
  auto& slot = is_mixed_connected(g, 1, 1) ? result.mixed_connected : result.not_mixed_connected;
  if (!slot) slot = g;
  return result.mixed_connected && result.not_mixed_connected;
}

}  // namespace

GapSearchResult search_mixed_connectivity_gap(int max_vertices, std::uint64_t seed) {
  GapSearchResult result;
  constexpr int kExhaustiveLimit = 7;
  for (int n = 4; n <= std::min(max_vertices, kExhaustiveLimit); ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      if (!min_degree_at_least(n, mask, 3)) continue;
      if (consider(from_mask(n, mask), result)) return result;
    }
  }
  if (max_vertices <= kExhaustiveLimit) return result;

  std::mt19937_64 rng(seed);
  constexpr int kSamplesPerOrder = 200000;
  for (int n = kExhaustiveLimit + 1; n <= max_vertices && n <= 11; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (int sample = 0; sample < kSamplesPerOrder; ++sample) {
      const std::uint64_t mask = rng() & ((std::uint64_t{1} << pairs) - 1);
      if (!min_degree_at_least(n, mask, 3)) continue;
      if (consider(from_mask(n, mask), result)) return result;
    }
  }
  return result;
}

}  // namespace bundlefd::cli
