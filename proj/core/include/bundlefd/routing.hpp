#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "bundlefd/bundle.hpp"
#include "bundlefd/enumeration.hpp"
#include "bundlefd/graph.hpp"

namespace bundlefd {

enum class Proof { Vertex, Edge };

/// Leaves of the case trees of the two routing constructions.
///
/// The vertex construction ends in BaseSmallNonadjacent or BaseSmallAdjacent
/// when few base fibres carry faults; the edge construction ends in
/// BaseSmallFewFaults or BaseSmallSaturated. LiftMissesAdjacentEndpoint only
/// occurs for vertex faults.
enum class ProofBranch {
  SameFibreFewFaults,
  SameFibreManyFaults,
  LiftHitsTarget,
  LiftMissesFibreSaturated,
  LiftMissesLiftAvoids,
  LiftMissesMixedSubpath,
  LiftMissesAdjacentEndpoint,
  BaseSmallNonadjacent,
  BaseSmallAdjacent,
  BaseSmallFewFaults,
  BaseSmallSaturated,
};

/// e.g. "XB_LARGE_LIFT_MISSES/mixed-subpath".
std::string_view to_string(ProofBranch branch);

/// The branches reachable by each construction.
std::vector<ProofBranch> branches_of(Proof proof);

/// Everything the construction chose on its way to the returned path.
struct CaseTrace {
  Proof proof = Proof::Vertex;
  ProofBranch branch = ProofBranch::SameFibreFewFaults;

  /// Base vertices other than p(x), p(y) whose fibres hold a vertex fault.
  std::vector<Vertex> x_b;
  /// The first bb of x_b, removed from the base when choosing Q.
  std::vector<Vertex> x_b_prime;
  /// Degenerate and nondegenerate edge faults.
  std::vector<Edge> y_d;
  std::vector<Edge> y_n;
  /// The first bb of y_n, whose projections are removed from the base.
  std::vector<Edge> y_n_prime;
  /// Base edges p(x)v whose fibre F(v) holds a degenerate fault.
  std::vector<Edge> base_exclusions;
  /// Vertices of F_y whose lift back to F_x meets a fault.
  std::vector<Vertex> x_prime_set;
  /// Edges x'v' of F_y whose route back to x meets a fault.
  std::vector<Edge> y_d_prime;

  std::optional<PathSeq> base_path;  // Q in the base graph
  std::optional<PathSeq> lift;       // lift of Q starting at x
  std::optional<Vertex> x_prime;     // end of that lift
  std::optional<Vertex> v;           // detour fibre (base vertex) or shifted start (total vertex)
  std::optional<Vertex> v_prime;     // second vertex of the fibre path P
};

struct RouteResult {
  PathSeq path;
  CaseTrace trace;
};

/// Fault diameters the vertex construction is bounded by.
struct VertexCertificates {
  Distance fibre_vertex;  // D^V_a(F)
  Distance base_vertex;   // D^V_bb(B)
  Distance fibre_mixed;   // D_(a-1,1)(F)
  Distance base_mixed;    // D_(bb-1,1)(B)

  static VertexCertificates compute(const Bundle& b, int a, int bb, const EnumerationOptions& options = {});
};

struct EdgeCertificates {
  Distance fibre_edge;  // D^E_a(F)
  Distance base_edge;   // D^E_bb(B)

  static EdgeCertificates compute(const Bundle& b, int a, int bb, const EnumerationOptions& options = {});
};

/// Routes around a+bb+1 faulty vertices with length at most D^V_a(F) + D^V_bb(B).
///
/// The constructor checks the hypotheses once and throws HypothesisUnmet if
/// they fail. Every route is verified before it is returned; a broken
/// guarantee raises RoutingDefect.
class VertexFaultRouter {
 public:
  VertexFaultRouter(const Bundle& b, int a, int bb, VertexCertificates certs);

  RouteResult route(const FaultSet& faults, Vertex x, Vertex y) const;
  Distance bound() const { return certs_.fibre_vertex + certs_.base_vertex; }
  int fault_count() const { return a_ + bb_ + 1; }

 private:
  const Bundle* b_;
  int a_;
  int bb_;
  VertexCertificates certs_;
};

/// Routes around a+bb+1 faulty edges with length at most D^E_a(F) + D^E_bb(B).
class EdgeFaultRouter {
 public:
  EdgeFaultRouter(const Bundle& b, int a, int bb, EdgeCertificates certs);

  RouteResult route(const FaultSet& faults, Vertex x, Vertex y) const;
  Distance bound() const { return certs_.fibre_edge + certs_.base_edge; }
  int fault_count() const { return a_ + bb_ + 1; }

 private:
  const Bundle* b_;
  int a_;
  int bb_;
  EdgeCertificates certs_;
};

RouteResult route_vertex_faults(const Bundle& b, const FaultSet& faults, Vertex x, Vertex y, int a, int bb,
                                const VertexCertificates& certs);
RouteResult route_edge_faults(const Bundle& b, const FaultSet& faults, Vertex x, Vertex y, int a, int bb,
                              const EdgeCertificates& certs);

/// Breadth-first shortest path in G \ faults. Throws NoPath if x and y are separated.
PathSeq shortest_path_oracle(const Bundle& b, const FaultSet& faults, Vertex x, Vertex y);

}  // namespace bundlefd
