#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "bundlefd/distance.hpp"
#include "bundlefd/enumeration.hpp"
#include "bundlefd/graph.hpp"

namespace bundlefd {

/// Worst-case diameter after deleting a fixed number of vertices and edges.
struct FaultDiameterResult {
  Distance value;
  /// Fault set attaining value, with exactly the requested cardinalities.
  FaultSet witness;
  /// Lexicographically first surviving pair at distance `value` in G \ witness
  /// (a disconnected pair when value is infinite). Empty when fewer than two
  /// vertices survive.
  std::optional<std::pair<Vertex, Vertex>> witness_pair;
  /// Number of faulted subgraphs actually examined (0 when decided by a cut).
  std::uint64_t evaluated = 0;
};

/// D^V_a(G): maximum diameter of G \ X over |X| = a.
FaultDiameterResult vertex_fault_diameter(const Graph& g, int a, const EnumerationOptions& options = {});

/// D^E_a(G): maximum diameter of G \ Y over |Y| = a.
FaultDiameterResult edge_fault_diameter(const Graph& g, int a, const EnumerationOptions& options = {});

/// D_(p,q)(G): maximum diameter of G \ (X ∪ Y) over |X| = p, |Y| = q.
///
/// Edge faults may touch vertex faults. When p >= κ(G) or p + q >= λ(G) the
/// value is infinite and the witness comes from a minimum cut rather than
/// enumeration. Otherwise every fault set is examined: vertex subsets in
/// colex order outside, edge subsets in colex order inside, and the witness
/// is the first one attaining the maximum.
///
/// Throws InvalidArgument when p > |V| or q > |E| (no such fault set exists)
/// and BudgetExceeded when the enumeration is larger than options.budget.
FaultDiameterResult mixed_fault_diameter(const Graph& g, int p, int q, const EnumerationOptions& options = {});

/// Checks max_{H ∈ H^V_a} D^E_b(H) = D_(a,b)(G) and max_{H ∈ H^E_b} D^V_a(H) = D_(a,b)(G),
/// computing each side separately. Throws HypothesisUnmet unless G is (a,b)+connected.
bool two_stage_decomposition_check(const Graph& g, int a, int b, const EnumerationOptions& options = {});

}  // namespace bundlefd
