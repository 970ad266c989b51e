#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bundlefd/bundle.hpp"
#include "bundlefd/enumeration.hpp"
#include "bundlefd/graph.hpp"

namespace bundlefd {

enum class TheoremId {
  VfdImproved,
  EfdImproved,
  VfdPlusOne,
  EfdPlusOne,
  MixedConn,
  MixedFdFibre,
  MixedFdBase,
  DiamDecomp,
};

enum class Verdict { Holds, HoldsWithEquality, Violated, HypothesisUnmet };

enum class FaultKind { Vertex, Edge };
enum class Side { Fibre, Base };

/// Upper-case identifiers such as "VFD_IMPROVED" and "HOLDS_WITH_EQUALITY".
std::string_view to_string(TheoremId id);
std::string_view to_string(Verdict verdict);

struct Hypothesis {
  std::string name;
  bool holds = false;
};

/// Outcome of checking one inequality lhs <= rhs on a concrete bundle.
///
/// lhs and rhs are empty only when the quantity is undefined, e.g. when more
/// vertices would be deleted than the graph has. The witness is the fault set
/// attaining lhs in the total graph.
struct BoundReport {
  TheoremId theorem = TheoremId::VfdImproved;
  std::vector<std::pair<std::string, int>> parameters;
  std::vector<Hypothesis> hypotheses;
  std::optional<Distance> lhs;
  std::optional<Distance> rhs;
  Verdict verdict = Verdict::HypothesisUnmet;
  FaultSet witness;
  std::optional<std::pair<Vertex, Vertex>> witness_pair;
  /// Every intermediate value, by name, in the order it was computed.
  std::vector<std::pair<std::string, std::string>> quantities;
  /// Informational findings that never affect the verdict.
  std::vector<std::string> observations;

  bool hypotheses_hold() const;
};

/// D^V_{a+bb+1}(G) <= D^V_a(F) + D^V_bb(B) under the extra hypotheses
/// D_(a-1,1)(F) <= D^V_a(F) and D_(bb-1,1)(B) <= D^V_bb(B). Requires a, bb > 0.
BoundReport check_vfd_improved(const Bundle& b, int a, int bb, const EnumerationOptions& options = {});

/// D^E_{a+bb+1}(G) <= D^E_a(F) + D^E_bb(B) when both edge fault diameters are at least 2.
BoundReport check_efd_improved(const Bundle& b, int a, int bb, const EnumerationOptions& options = {});

/// The unconditional "+1" bounds for vertex or edge faults.
BoundReport check_baseline_bounds(const Bundle& b, int a, int bb, FaultKind kind,
                                  const EnumerationOptions& options = {});

/// G is (pF+pB+1, qF+qB)+connected whenever F is (pF,qF)+connected and B is
/// (pB,qB)+connected. lhs is D_(pF+pB+1, qF+qB)(G), rhs is infinite, and the
/// check holds iff lhs is finite.
BoundReport check_mixed_connectivity_bound(const Bundle& b, int pF, int qF, int pB, int qB,
                                           const EnumerationOptions& options = {});

/// Mixed fault diameter bound with the faults charged to one side. Requires p + q > 0.
BoundReport check_mixed_fd_bounds(const Bundle& b, int p, int q, Side side, const EnumerationOptions& options = {});

/// D(G) <= D(F) + D(B), plus an informational comparison of D^V_1(G),
/// D^E_1(G), D(G) and D(F) + D(B).
BoundReport check_diameter_decomposition(const Bundle& b, const EnumerationOptions& options = {});

/// "key=value" lines, one record per report, terminated by a blank line.
std::string to_key_value(const BoundReport& report);
std::string to_json(const BoundReport& report);

}  // namespace bundlefd
