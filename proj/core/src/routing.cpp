#include "bundlefd/routing.hpp"

#include <string>
#include <unordered_map>

#include "bundlefd/connectivity.hpp"
#include "bundlefd/fault_metrics.hpp"

namespace bundlefd {
namespace {

PathSeq tail(const PathSeq& p, std::size_t from) {
  return PathSeq{{p.vertices.begin() + static_cast<std::ptrdiff_t>(from), p.vertices.end()}};
}

// Concatenates segments into a walk; path() erases any loops the walk closes.
class Walk {
 public:
  explicit Walk(Vertex start) : walk_{start} {}

  Walk& then(Vertex v) {
    if (walk_.back() != v) walk_.push_back(v);
    return *this;
  }
  Walk& then(const PathSeq& segment) {
    for (Vertex v : segment.vertices) then(v);
    return *this;
  }

  PathSeq path() const {
    PathSeq out;
    std::unordered_map<Vertex, std::size_t> position;
    for (Vertex v : walk_) {
      if (auto it = position.find(v); it != position.end()) {
        for (std::size_t i = it->second + 1; i < out.vertices.size(); ++i) position.erase(out.vertices[i]);
        out.vertices.resize(it->second + 1);
      } else {
        position.emplace(v, out.vertices.size());
        out.vertices.push_back(v);
      }
    }
    return out;
  }

 private:
  std::vector<Vertex> walk_;
};

PathSeq need(std::optional<PathSeq> p, ProofBranch branch, const char* what) {
  if (!p) throw RoutingDefect(std::string(to_string(branch)) + ": " + what);
  return std::move(*p);
}

class Construction {
 public:
  Construction(const Bundle& b, const FaultSet& faults, Proof proof)
      : b_(b),
        total_(b.total()),
        base_(b.base()),
        bad_vertex_(static_cast<std::size_t>(total_.order()), false),
        bad_edge_(total_.size(), false) {
    trace.proof = proof;
    for (Vertex v : faults.vertices) bad_vertex_[v] = true;
    for (const Edge& e : faults.edges) bad_edge_[*total_.edge_id(e.u, e.v)] = true;
  }

  CaseTrace trace;

  PathSeq route_vertex(Vertex x, Vertex y, int a, int bb) {
    const Vertex px = b_.base_of(x);
    const Vertex py = b_.base_of(y);
    auto faults_in = [&](Vertex u) {
      int k = 0;
      for (Vertex w : b_.fibre_vertices(u)) k += bad_vertex_[w] ? 1 : 0;
      return k;
    };

    if (px == py) {
      if (faults_in(px) <= a) return set(ProofBranch::SameFibreFewFaults, fibre_path(px, x, y), "fibre path");
      set(ProofBranch::SameFibreManyFaults);
      for (Vertex v : base_.neighbors(px)) {
        if (faults_in(v) != 0) continue;
        trace.v = v;
        return need(detour(x, y, PathSeq{{v, px}}), trace.branch, "detour fibre path");
      }
      throw RoutingDefect("SAME_FIBRE_MANY_FAULTS: every neighbouring fibre is faulty");
    }

    for (Vertex u = 0; u < base_.order(); ++u) {
      if (u != px && u != py && faults_in(u) > 0) trace.x_b.push_back(u);
    }

    if (static_cast<int>(trace.x_b.size()) >= bb) {
      trace.x_b_prime.assign(trace.x_b.begin(), trace.x_b.begin() + bb);
      std::vector<bool> blocked(static_cast<std::size_t>(base_.order()), false);
      for (Vertex u : trace.x_b_prime) blocked[u] = true;
      const PathSeq q = need(base_path(px, py, &blocked, nullptr), ProofBranch::LiftHitsTarget, "base path Q");
      const PathSeq qx = record_lift(q, x);

      if (qx.back() == y) {
        set(ProofBranch::LiftHitsTarget);
        if (clean(qx)) return qx;
        for (Vertex s : total_.neighbors(x)) {
          if (b_.base_of(s) != px || bad_vertex_[s]) continue;
          const PathSeq qs = b_.lift_path(q, s);
          if (!clean(qs)) continue;
          trace.v = s;
          return Walk(x).then(qs).then(y).path();
        }
        throw RoutingDefect("XB_LARGE_LIFT_HITS_TARGET: no neighbour with a fault-free lift");
      }

      if (faults_in(px) == a + 1 || faults_in(py) == a + 1) {
        set(ProofBranch::LiftMissesFibreSaturated);
        return need(around_saturated(q, x, y, faults_in(px) == a + 1, faults_in(py) == a + 1), trace.branch,
                    "no fault-free lift with a fibre path");
      }
      if (auto p = either_lift(q, x, y)) return set(ProofBranch::LiftMissesLiftAvoids, p, "");

      const Vertex xp = qx.back();
      const bool adjacent = total_.has_edge(xp, y);
      set(adjacent ? ProofBranch::LiftMissesAdjacentEndpoint : ProofBranch::LiftMissesMixedSubpath);
      std::vector<bool> extra_vertices(static_cast<std::size_t>(total_.order()), false);
      for (Vertex w : b_.fibre_vertices(py)) {
        if (w == xp || w == y || clean(b_.lift_path(q.reversed(), w))) continue;
        extra_vertices[w] = true;
        trace.x_prime_set.push_back(w);
      }
      std::vector<bool> extra_edges(total_.size(), false);
      if (adjacent) extra_edges[*total_.edge_id(xp, y)] = true;
      const PathSeq p =
          need(fibre_path(py, xp, y, &extra_vertices, &extra_edges), trace.branch, "fibre path P in F_y");
      return back_through(q, x, p);
    }

    std::vector<bool> blocked(static_cast<std::size_t>(base_.order()), false);
    for (Vertex u : trace.x_b) blocked[u] = true;
    std::vector<bool> blocked_edges(base_.size(), false);
    if (auto e = base_.edge_id(px, py)) {
      set(ProofBranch::BaseSmallAdjacent);
      blocked_edges[*e] = true;
    } else {
      set(ProofBranch::BaseSmallNonadjacent);
    }
    const PathSeq q = need(base_path(px, py, &blocked, &blocked_edges), trace.branch, "base path Q");
    trace.base_path = q;
    trace.v = q.vertices[1];
    return need(detour(x, y, tail(q, 1)), trace.branch, "detour fibre path");
  }

  PathSeq route_edge(Vertex x, Vertex y, int a, int bb) {
    const Vertex px = b_.base_of(x);
    const Vertex py = b_.base_of(y);
    std::vector<int> degenerate(static_cast<std::size_t>(base_.order()), 0);
    std::vector<bool> projected(base_.size(), false);
    for (std::size_t id = 0; id < total_.size(); ++id) {
      if (!bad_edge_[id]) continue;
      const Edge& e = total_.edge(id);
      if (b_.is_degenerate(e)) {
        trace.y_d.push_back(e);
        ++degenerate[b_.base_of(e.u)];
      } else {
        trace.y_n.push_back(e);
        projected[*base_.edge_id(b_.base_of(e.u), b_.base_of(e.v))] = true;
      }
    }

    if (px == py) {
      if (degenerate[px] <= a) return set(ProofBranch::SameFibreFewFaults, fibre_path(px, x, y), "fibre path");
      set(ProofBranch::SameFibreManyFaults);
      for (Vertex v : base_.neighbors(px)) {
        if (degenerate[v] != 0 || projected[*base_.edge_id(px, v)]) continue;
        trace.v = v;
        return need(detour(x, y, PathSeq{{v, px}}), trace.branch, "detour fibre path");
      }
      throw RoutingDefect("SAME_FIBRE_MANY_FAULTS: every neighbouring fibre is faulty");
    }

    if (static_cast<int>(trace.y_n.size()) >= bb) {
      trace.y_n_prime.assign(trace.y_n.begin(), trace.y_n.begin() + bb);
      std::vector<bool> blocked(base_.size(), false);
      for (const Edge& e : trace.y_n_prime) blocked[*base_.edge_id(b_.base_of(e.u), b_.base_of(e.v))] = true;
      const PathSeq q = need(base_path(px, py, nullptr, &blocked), ProofBranch::LiftHitsTarget, "base path Q");
      const PathSeq qx = record_lift(q, x);

      if (qx.back() == y) {
        set(ProofBranch::LiftHitsTarget);
        if (clean(qx)) return qx;
        for (Vertex s : total_.neighbors(x)) {
          if (b_.base_of(s) != px || edge_bad(x, s)) continue;
          const PathSeq qs = b_.lift_path(q, s);
          if (!clean(qs) || edge_bad(qs.back(), y)) continue;
          trace.v = s;
          return Walk(x).then(qs).then(y).path();
        }
        throw RoutingDefect("XB_LARGE_LIFT_HITS_TARGET: no neighbour with a fault-free lift");
      }

      if (degenerate[px] == a + 1 || degenerate[py] == a + 1) {
        set(ProofBranch::LiftMissesFibreSaturated);
        return need(around_saturated(q, x, y, degenerate[px] == a + 1, degenerate[py] == a + 1), trace.branch,
                    "no fault-free lift with a fibre path");
      }
      if (auto p = either_lift(q, x, y)) return set(ProofBranch::LiftMissesLiftAvoids, p, "");

      set(ProofBranch::LiftMissesMixedSubpath);
      const Vertex xp = qx.back();
      std::vector<bool> extra_edges(total_.size(), false);
      for (Vertex w : total_.neighbors(xp)) {
        if (b_.base_of(w) != py) continue;
        const PathSeq back = b_.lift_path(q.reversed(), w);
        if (clean(back) && !edge_bad(back.back(), x)) continue;
        extra_edges[*total_.edge_id(xp, w)] = true;
        trace.y_d_prime.push_back(Edge(xp, w));
      }
      const PathSeq p = need(fibre_path(py, xp, y, nullptr, &extra_edges), trace.branch, "fibre path P in F_y");
      return back_through(q, x, p);
    }

    const PathSeq q = need(base_path(px, py, nullptr, &projected), ProofBranch::BaseSmallFewFaults, "base path Q");
    if (degenerate[px] <= a || degenerate[py] <= a) {
      set(ProofBranch::BaseSmallFewFaults);
      record_lift(q, x);
      std::optional<PathSeq> p;
      if (degenerate[py] <= a) p = via_target_fibre(q, x, y);
      if (!p && degenerate[px] <= a) p = via_source_fibre(q, x, y);
      return need(std::move(p), trace.branch, "fibre path next to a lift");
    }

    set(ProofBranch::BaseSmallSaturated);
    std::vector<bool> blocked = projected;
    for (Vertex v : base_.neighbors(px)) {
      if (degenerate[v] == 0) continue;
      blocked[*base_.edge_id(px, v)] = true;
      trace.base_exclusions.push_back(Edge(px, v));
    }
    const PathSeq q2 = need(base_path(px, py, nullptr, &blocked), trace.branch, "base path Q'");
    trace.base_path = q2;
    trace.v = q2.vertices[1];
    return need(detour(x, y, tail(q2, 1)), trace.branch, "detour fibre path");
  }

  void verify(const PathSeq& p, Vertex x, Vertex y, Distance bound) const {
    const std::string where(to_string(trace.branch));
    if (!is_path(total_, p) || p.front() != x || p.back() != y) {
      throw RoutingDefect(where + ": result is not a simple x-y path");
    }
    if (!clean(p)) throw RoutingDefect(where + ": result meets a fault");
    if (Distance(static_cast<std::int64_t>(p.length())) > bound) {
      throw RoutingDefect(where + ": length " + std::to_string(p.length()) + " exceeds the bound " + bound.to_string());
    }
  }

 private:
  void set(ProofBranch branch) { trace.branch = branch; }

  PathSeq set(ProofBranch branch, std::optional<PathSeq> p, const char* what) {
    trace.branch = branch;
    return need(std::move(p), branch, what);
  }

  bool edge_bad(Vertex u, Vertex v) const { return bad_edge_[*total_.edge_id(u, v)]; }

  bool clean(const PathSeq& p) const {
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      if (bad_vertex_[p.vertices[i]]) return false;
      if (i > 0 && edge_bad(p.vertices[i - 1], p.vertices[i])) return false;
    }
    return true;
  }

  PathSeq record_lift(const PathSeq& q, Vertex x) {
    PathSeq lift = b_.lift_path(q, x);
    trace.base_path = q;
    trace.lift = lift;
    trace.x_prime = lift.back();
    return lift;
  }

  /// Shortest s-t path inside fibre F(u), avoiding faults and the optional extra blocks.
  std::optional<PathSeq> fibre_path(Vertex u, Vertex s, Vertex t, const std::vector<bool>* extra_vertices = nullptr,
                                    const std::vector<bool>* extra_edges = nullptr) const {
    return shortest_path(
        total_, s, t,
        [&](Vertex w) {
          return b_.base_of(w) == u && !bad_vertex_[w] && !(extra_vertices && (*extra_vertices)[w]);
        },
        [&](std::size_t id) { return !bad_edge_[id] && !(extra_edges && (*extra_edges)[id]); });
  }

  std::optional<PathSeq> base_path(Vertex s, Vertex t, const std::vector<bool>* blocked_vertices,
                                   const std::vector<bool>* blocked_edges) const {
    return shortest_path(
        base_, s, t, [&](Vertex w) { return !(blocked_vertices && (*blocked_vertices)[w]); },
        [&](std::size_t id) { return !(blocked_edges && (*blocked_edges)[id]); });
  }

  /// Lift of q from x followed by a path inside the last fibre.
  std::optional<PathSeq> via_target_fibre(const PathSeq& q, Vertex x, Vertex y) {
    const PathSeq qx = b_.lift_path(q, x);
    if (!clean(qx)) return std::nullopt;
    auto p = fibre_path(q.back(), qx.back(), y);
    if (!p) return std::nullopt;
    return Walk(x).then(qx).then(*p).path();
  }

  /// A path inside the first fibre followed by the lift of q ending at y.
  std::optional<PathSeq> via_source_fibre(const PathSeq& q, Vertex x, Vertex y) {
    const PathSeq qy = b_.lift_path(q.reversed(), y);
    if (!clean(qy)) return std::nullopt;
    auto p = fibre_path(q.front(), x, qy.back());
    if (!p) return std::nullopt;
    return Walk(x).then(*p).then(qy.reversed()).path();
  }

  /// Crosses whichever end fibre is not saturated; with both saturated the
  /// target fibre is tried last first.
  std::optional<PathSeq> around_saturated(const PathSeq& q, Vertex x, Vertex y, bool source_saturated,
                                          bool target_saturated) {
    if (target_saturated && !source_saturated) return via_source_fibre(q, x, y);
    if (auto p = via_target_fibre(q, x, y)) return p;
    if (target_saturated) return via_source_fibre(q, x, y);
    return std::nullopt;
  }

  std::optional<PathSeq> either_lift(const PathSeq& q, Vertex x, Vertex y) {
    if (auto p = via_target_fibre(q, x, y)) return p;
    return via_source_fibre(q, x, y);
  }

  /// x -> x' into F(v), a path inside F(v), then the lift of `rest` (a base
  /// path from v to p(y)) into y.
  std::optional<PathSeq> detour(Vertex x, Vertex y, const PathSeq& rest) {
    const Vertex v = rest.front();
    const Vertex xp = b_.lift_path(PathSeq{{b_.base_of(x), v}}, x).back();
    const PathSeq back = b_.lift_path(rest.reversed(), y);
    auto p = fibre_path(v, xp, back.back());
    if (!p) return std::nullopt;
    return Walk(x).then(*p).then(back.reversed()).path();
  }

  /// x -> v, the lift of q backwards from v to v' = p[1], then the rest of p.
  PathSeq back_through(const PathSeq& q, Vertex x, const PathSeq& p) {
    const Vertex vp = p.vertices.at(1);
    const PathSeq back = b_.lift_path(q.reversed(), vp);
    trace.v_prime = vp;
    trace.v = back.back();
    return Walk(x).then(back.reversed()).then(tail(p, 1)).path();
  }

  const Bundle& b_;
  const Graph& total_;
  const Graph& base_;
  std::vector<bool> bad_vertex_;
  std::vector<bool> bad_edge_;
};

void check_endpoints(const Graph& total, const FaultSet& faults, Vertex x, Vertex y) {
  if (!total.contains(x) || !total.contains(y)) throw InvalidArgument("unknown endpoint");
  if (x == y) throw InvalidArgument("endpoints must be distinct");
  if (faults.contains(x) || faults.contains(y)) throw InvalidArgument("an endpoint is faulty");
}

}  // namespace

std::string_view to_string(ProofBranch branch) {
  switch (branch) {
    case ProofBranch::SameFibreFewFaults: return "SAME_FIBRE_FEW_FAULTS";
    case ProofBranch::SameFibreManyFaults: return "SAME_FIBRE_MANY_FAULTS";
    case ProofBranch::LiftHitsTarget: return "XB_LARGE_LIFT_HITS_TARGET";
    case ProofBranch::LiftMissesFibreSaturated: return "XB_LARGE_LIFT_MISSES/fibre-saturated";
    case ProofBranch::LiftMissesLiftAvoids: return "XB_LARGE_LIFT_MISSES/lift-avoids";
    case ProofBranch::LiftMissesMixedSubpath: return "XB_LARGE_LIFT_MISSES/mixed-subpath";
    case ProofBranch::LiftMissesAdjacentEndpoint: return "XB_LARGE_LIFT_MISSES/adjacent-endpoint";
    case ProofBranch::BaseSmallNonadjacent: return "XB_SMALL/nonadjacent-base";
    case ProofBranch::BaseSmallAdjacent: return "XB_SMALL/adjacent-base";
    case ProofBranch::BaseSmallFewFaults: return "XB_SMALL/few-faults";
    case ProofBranch::BaseSmallSaturated: return "XB_SMALL/saturated";
  }
  return "UNKNOWN";
}

std::vector<ProofBranch> branches_of(Proof proof) {
  std::vector<ProofBranch> common{ProofBranch::SameFibreFewFaults, ProofBranch::SameFibreManyFaults,
                                  ProofBranch::LiftHitsTarget, ProofBranch::LiftMissesFibreSaturated,
                                  ProofBranch::LiftMissesLiftAvoids, ProofBranch::LiftMissesMixedSubpath};
  if (proof == Proof::Vertex) {
    common.insert(common.end(), {ProofBranch::LiftMissesAdjacentEndpoint, ProofBranch::BaseSmallNonadjacent,
                                 ProofBranch::BaseSmallAdjacent});
  } else {
    common.insert(common.end(), {ProofBranch::BaseSmallFewFaults, ProofBranch::BaseSmallSaturated});
  }
  return common;
}

VertexCertificates VertexCertificates::compute(const Bundle& b, int a, int bb, const EnumerationOptions& options) {
  if (a <= 0 || bb <= 0) throw InvalidArgument("vertex routing needs a > 0 and bb > 0");
  return {vertex_fault_diameter(b.fibre(), a, options).value, vertex_fault_diameter(b.base(), bb, options).value,
          mixed_fault_diameter(b.fibre(), a - 1, 1, options).value,
          mixed_fault_diameter(b.base(), bb - 1, 1, options).value};
}

EdgeCertificates EdgeCertificates::compute(const Bundle& b, int a, int bb, const EnumerationOptions& options) {
  if (a < 0 || bb < 0) throw InvalidArgument("edge routing needs a >= 0 and bb >= 0");
  return {edge_fault_diameter(b.fibre(), a, options).value, edge_fault_diameter(b.base(), bb, options).value};
}

VertexFaultRouter::VertexFaultRouter(const Bundle& b, int a, int bb, VertexCertificates certs)
    : b_(&b), a_(a), bb_(bb), certs_(certs) {
  if (a <= 0 || bb <= 0) throw HypothesisUnmet("vertex routing needs a > 0 and bb > 0");
  if (vertex_connectivity(b.fibre()) < a + 1) throw HypothesisUnmet("the fibre is not (a+1)-connected");
  if (vertex_connectivity(b.base()) < bb + 1) throw HypothesisUnmet("the base is not (bb+1)-connected");
  if (certs.fibre_mixed > certs.fibre_vertex) throw HypothesisUnmet("D_(a-1,1)(F) exceeds D^V_a(F)");
  if (certs.base_mixed > certs.base_vertex) throw HypothesisUnmet("D_(bb-1,1)(B) exceeds D^V_bb(B)");
}

RouteResult VertexFaultRouter::route(const FaultSet& faults, Vertex x, Vertex y) const {
  const Graph& total = b_->total();
  faults.validate(total);
  if (!faults.edges.empty()) throw InvalidFaultSet("vertex routing accepts vertex faults only");
  if (static_cast<int>(faults.vertices.size()) != fault_count()) {
    throw InvalidFaultSet("expected exactly " + std::to_string(fault_count()) + " faulty vertices");
  }
  check_endpoints(total, faults, x, y);
  Construction c(*b_, faults, Proof::Vertex);
  PathSeq path = c.route_vertex(x, y, a_, bb_);
  c.verify(path, x, y, bound());
  return {std::move(path), std::move(c.trace)};
}

EdgeFaultRouter::EdgeFaultRouter(const Bundle& b, int a, int bb, EdgeCertificates certs)
    : b_(&b), a_(a), bb_(bb), certs_(certs) {
  if (a < 0 || bb < 0) throw HypothesisUnmet("edge routing needs a >= 0 and bb >= 0");
  if (edge_connectivity(b.fibre()) < a + 1) throw HypothesisUnmet("the fibre is not (a+1)-edge-connected");
  if (edge_connectivity(b.base()) < bb + 1) throw HypothesisUnmet("the base is not (bb+1)-edge-connected");
  if (certs.fibre_edge < Distance(2)) throw HypothesisUnmet("D^E_a(F) is below 2");
  if (certs.base_edge < Distance(2)) throw HypothesisUnmet("D^E_bb(B) is below 2");
}

RouteResult EdgeFaultRouter::route(const FaultSet& faults, Vertex x, Vertex y) const {
  const Graph& total = b_->total();
  faults.validate(total);
  if (!faults.vertices.empty()) throw InvalidFaultSet("edge routing accepts edge faults only");
  if (static_cast<int>(faults.edges.size()) != fault_count()) {
    throw InvalidFaultSet("expected exactly " + std::to_string(fault_count()) + " faulty edges");
  }
  check_endpoints(total, faults, x, y);
  Construction c(*b_, faults, Proof::Edge);
  PathSeq path = c.route_edge(x, y, a_, bb_);
  c.verify(path, x, y, bound());
  return {std::move(path), std::move(c.trace)};
}

RouteResult route_vertex_faults(const Bundle& b, const FaultSet& faults, Vertex x, Vertex y, int a, int bb,
                                const VertexCertificates& certs) {
  return VertexFaultRouter(b, a, bb, certs).route(faults, x, y);
}

RouteResult route_edge_faults(const Bundle& b, const FaultSet& faults, Vertex x, Vertex y, int a, int bb,
                              const EdgeCertificates& certs) {
  return EdgeFaultRouter(b, a, bb, certs).route(faults, x, y);
}

PathSeq shortest_path_oracle(const Bundle& b, const FaultSet& faults, Vertex x, Vertex y) {
  const Graph& total = b.total();
  faults.validate(total);
  if (!total.contains(x) || !total.contains(y)) throw InvalidArgument("unknown endpoint");
  if (faults.contains(x) || faults.contains(y)) throw InvalidArgument("an endpoint is faulty");
  std::vector<bool> bad_edge(total.size(), false);
  for (const Edge& e : faults.edges) bad_edge[*total.edge_id(e.u, e.v)] = true;
  auto path = shortest_path(
      total, x, y, [&](Vertex w) { return !faults.contains(w); }, [&](std::size_t id) { return !bad_edge[id]; });
  if (!path) throw NoPath("vertices " + std::to_string(x) + " and " + std::to_string(y) + " are disconnected");
  return std::move(*path);
}

}  // namespace bundlefd
