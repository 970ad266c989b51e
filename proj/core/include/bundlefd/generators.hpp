#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "bundlefd/graph.hpp"

namespace bundlefd {

enum class GeneratorId { Cycle, Complete, CompleteMinusEdge, Path, Hypercube, Circulant };

/// Parses "cycle", "complete", "complete_minus_edge", "path", "hypercube", "circulant".
GeneratorId parse_generator_id(std::string_view name);

/// Named graph families with a canonical vertex numbering.
///
///   Cycle {n}                 n >= 3, edges i ~ i+1 (mod n)
///   Complete {n}              n >= 1
///   CompleteMinusEdge {n}     n >= 2, K_n without the edge 0-1
///   Path {n}                  n >= 1 vertices
///   Hypercube {d}             0 <= d <= 20, vertices are bit strings
///   Circulant {n, j1, j2...}  n >= 3, 1 <= j <= n/2, i ~ i+j (mod n)
///
/// Throws InvalidArgument on parameters outside the family's domain.
Graph generate(GeneratorId id, std::span<const int> params);

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_minus_edge(int n);
Graph path_graph(int n);
Graph hypercube(int d);
Graph circulant(int n, std::span<const int> jumps);

}  // namespace bundlefd
