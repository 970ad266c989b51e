#pragma once

#include <optional>
#include <vector>

#include "bundlefd/enumeration.hpp"
#include "bundlefd/graph.hpp"

namespace bundlefd {

/// κ(G): fewest vertices whose removal disconnects G; n-1 for K_n; 0 when G
/// is disconnected (including K1).
int vertex_connectivity(const Graph& g);

/// λ(G): fewest edges whose removal disconnects G; 0 when G is disconnected.
int edge_connectivity(const Graph& g);

/// A minimum vertex separator. Empty for complete and disconnected graphs.
std::vector<Vertex> minimum_vertex_cut(const Graph& g);

/// A minimum disconnecting edge set. Empty for disconnected graphs.
std::vector<Edge> minimum_edge_cut(const Graph& g);

/// True iff G stays connected after deleting any p vertices and any q edges.
///
/// The test p < κ and p + q < λ only short-circuits a false answer; the
/// decision itself is exhaustive. Throws InvalidArgument for graphs with
/// fewer than two vertices, where mixed connectivity is undefined.
bool is_mixed_connected(const Graph& g, int p, int q, const EnumerationOptions& options = {});

/// Colex-first (X, Y) with |X| = p, |Y| = q that disconnects G, if any.
/// Purely exhaustive, no connectivity shortcut.
std::optional<FaultSet> find_disconnecting_set(const Graph& g, int p, int q,
                                               const EnumerationOptions& options = {});

/// (k, l) is a connectivity pair iff G is (k, l-1)+connected and not
/// (k, l)+connected. For l = 0 the first condition becomes (k-1, 0)+connected,
/// which is vacuous when k = 0.
bool is_connectivity_pair(const Graph& g, int k, int l, const EnumerationOptions& options = {});

}  // namespace bundlefd
