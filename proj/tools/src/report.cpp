#include <bundlefd/fault_metrics.hpp>
#include <bundlefd/generators.hpp>

#include "bundlefd_cli/cli.hpp"

namespace bundlefd::cli {
namespace {

std::string twist_name(const Automorphism& phi) {
  const int n = phi.size();
  for (int k = 0; k < n; ++k) {
    if (phi == cycle_rotation(n, k)) return "rot" + std::to_string(k);
    if (phi == cycle_reflection(n, k)) return "refl" + std::to_string(k);
  }
  std::string name = "perm";
  for (Vertex f : phi.images()) name += "-" + std::to_string(f);
  return name;
}

}  // namespace

bool TwistRow::matches_example() const {
  return vertex_fd3 == Distance(5) && baseline_vertex == Verdict::HoldsWithEquality;
}

std::vector<TwistRow> twisted_torus_report(int n, const EnumerationOptions& options) {
  std::vector<TwistRow> rows;
  for (const Automorphism& phi : automorphisms(cycle_graph(n))) {
    const Bundle b = twisted_torus(n, phi);
    const Graph& g = b.total();
    TwistRow row;
    row.name = twist_name(phi);
    row.twist = phi;
    row.fingerprint = fingerprint(g);
    row.diameter = diameter(g);
    row.vertex_fd1 = vertex_fault_diameter(g, 1, options).value;
    row.edge_fd1 = edge_fault_diameter(g, 1, options).value;
    const FaultDiameterResult fd3 = vertex_fault_diameter(g, 3, options);
    row.vertex_fd3 = fd3.value;
    row.vertex_fd3_witness = fd3.witness;
    const Distance sum = diameter(b.fibre()) + diameter(b.base());
    row.decomposition_equality =
        row.vertex_fd1 == row.diameter && row.edge_fd1 == row.diameter && row.diameter == sum;
    row.baseline_vertex = check_baseline_bounds(b, 1, 1, FaultKind::Vertex, options).verdict;
    row.improved_vertex = check_vfd_improved(b, 1, 1, options).verdict;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace bundlefd::cli
