#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bundlefd/graph.hpp"

namespace bundlefd {

/// Adjacency-preserving permutation of a fibre's vertex ids.
class Automorphism {
 public:
  static Automorphism identity(int n);

  /// Throws InvalidBundle unless `images` is a bijection on V(fibre) that
  /// preserves adjacency.
  static Automorphism of(const Graph& fibre, std::vector<Vertex> images);

  Vertex operator()(Vertex f) const { return images_[static_cast<std::size_t>(f)]; }
  int size() const { return static_cast<int>(images_.size()); }
  std::span<const Vertex> images() const { return images_; }

  Automorphism inverse() const;
  /// Apply *this first, then `next`.
  Automorphism then(const Automorphism& next) const;
  bool is_identity() const;

  bool operator==(const Automorphism&) const = default;

 private:
  explicit Automorphism(std::vector<Vertex> images) : images_(std::move(images)) {}
  std::vector<Vertex> images_;
};

bool is_automorphism(const Graph& g, std::span<const Vertex> images);

/// Every automorphism of g, in lexicographic order of the image vectors.
std::vector<Automorphism> automorphisms(const Graph& g);

/// f -> f + k (mod n) on the cycle C_n.
Automorphism cycle_rotation(int n, int k);
/// f -> k - f (mod n) on the cycle C_n.
Automorphism cycle_reflection(int n, int k);

/// Fibre identification φ_{from,to} along the directed base edge (from, to).
struct Twist {
  Vertex from = 0;
  Vertex to = 0;
  std::vector<Vertex> images;
};

struct BundleVertex {
  Vertex base = 0;
  Vertex fibre = 0;
  auto operator<=>(const BundleVertex&) const = default;
};

/// A vertex or an edge of some graph.
using Element = std::variant<Vertex, Edge>;

/// Cartesian graph bundle with fibre F over base B.
///
/// Total-graph vertex ids are base-major: id = base * |V(F)| + fibre.
/// Twists are stored per base edge in both directions; the reverse twist
/// is always the inverse of the forward one.
class Bundle {
 public:
  const Graph& base() const { return base_; }
  const Graph& fibre() const { return fibre_; }
  const Graph& total() const { return total_; }

  int fibre_order() const { return fibre_.order(); }
  Vertex encode(BundleVertex v) const { return v.base * fibre_.order() + v.fibre; }
  BundleVertex decode(Vertex x) const { return {x / fibre_.order(), x % fibre_.order()}; }
  Vertex base_of(Vertex x) const { return x / fibre_.order(); }

  /// φ_{uv}. Throws InvalidArgument if uv is not a base edge.
  const Automorphism& twist(Vertex u, Vertex v) const;

  /// Vertex x -> p(x); degenerate edge -> base vertex; nondegenerate edge -> base edge.
  Element projection(const Element& element) const;
  bool is_degenerate(const Edge& e) const { return base_of(e.u) == base_of(e.v); }

  /// Induced subgraph on F(u), with vertex i standing for (u, i).
  Graph fibre_of(Vertex u) const;
  std::vector<Vertex> fibre_vertices(Vertex u) const;

  /// Lift of the base path q to the total vertex x, which must lie over q's start.
  PathSeq lift_path(const PathSeq& q, Vertex x) const;

  /// Wraps arbitrary parts without checking them; validate_bundle decides
  /// whether they form a bundle. `edge_twists[i]` is φ_{uv} for base edge i
  /// with u < v.
  static Bundle from_parts(Graph base, Graph fibre, std::vector<Automorphism> edge_twists, Graph total);

 private:
  Graph base_;
  Graph fibre_;
  Graph total_;
  std::vector<Automorphism> forward_;   // φ_{uv}, u < v, by base edge id
  std::vector<Automorphism> backward_;  // φ_{vu}
};

/// Builds the total graph. Base edges without a twist get the identity; a
/// twist given for (u, v) implies its inverse on (v, u). Throws InvalidBundle
/// on non-automorphisms, unknown base edges or inconsistent inverse pairs.
Bundle build_bundle(Graph base, Graph fibre, std::span<const Twist> twists = {});

/// G1 □ G2 on vertex ids u1 * |V(G2)| + u2.
Graph cartesian_product(const Graph& g1, const Graph& g2);

/// Checks, from the twist data, that every fibre is a copy of F and every
/// edge preimage is F □ K2. No general isomorphism search is involved.
bool validate_bundle(const Bundle& b);

/// C_n bundle over C_n whose only nontrivial twist sits on the base edge (n-1, 0).
Bundle twisted_torus(int n, const Automorphism& twist);

/// Bundle text format:
///   BASE    followed by an edge list
///   FIBRE   followed by an edge list
///   TWISTS  followed by lines "u v : p0 p1 ... p(k-1)" giving φ_{uv}
/// The TWISTS section is optional; omitted base edges carry the identity.
Bundle parse_bundle(std::string_view text);
Bundle read_bundle(std::istream& in);
void write_bundle(std::ostream& out, const Bundle& b);
std::string to_bundle_text(const Bundle& b);

}  // namespace bundlefd
