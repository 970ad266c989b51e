// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <bundlefd/bounds.hpp>
#include <bundlefd/bundle.hpp>
#include <bundlefd/connectivity.hpp>
#include <bundlefd/fault_metrics.hpp>
#include <bundlefd/generators.hpp>
#include <bundlefd/routing.hpp>
#include <bundlefd_cli/cli.hpp>

#include "brute_force.hpp"
#include "random_bundles.hpp"
#include "router_sweeps.hpp"

using namespace bundlefd;
using namespace bundlefd::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects failed expectations and a summary line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (failures_++ < 5) failed_ += (failed_.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : ", ") + text; }
  Outcome outcome() const {
    if (failures_ == 0) return {true, notes_};
    return {false, std::to_string(failures_) + " failed: " + failed_ + (notes_.empty() ? "" : " | " + notes_)};
  }

 private:
  int failures_ = 0;
  std::string failed_;
  std::string notes_;
};

std::string str(const Distance& d) { return d.to_string(); }

std::vector<std::pair<std::string, Automorphism>> c4_twists() {
  std::vector<std::pair<std::string, Automorphism>> out;
  for (int k = 0; k < 4; ++k) out.emplace_back("rot" + std::to_string(k), cycle_rotation(4, k));
  for (int k = 0; k < 4; ++k) out.emplace_back("refl" + std::to_string(k), cycle_reflection(4, k));
  return out;
}

Bundle k4e_square() { return build_bundle(complete_minus_edge(4), complete_minus_edge(4)); }

/// Bundles of the randomized theorem suite, from a fixed seed. Every fourth
/// one takes both factors from K4-e and Q3, the pool members that satisfy the
/// improved vertex bound's fault-diameter hypothesis.
std::vector<RandomBundle> theorem_suite_bundles() {
  std::mt19937_64 rng(20240601);
  const std::vector<std::string> improved_vertex_ready{"K4-e", "Q3"};
  std::vector<RandomBundle> out;
  for (int i = 0; i < 120; ++i) {
    out.push_back(i % 4 == 3 ? random_bundle(rng, 36, improved_vertex_ready) : random_bundle(rng, 36));
  }
  return out;
}

/// Bundles of the lift suite, from a fixed seed.
std::vector<RandomBundle> lift_suite_bundles() {
  std::mt19937_64 rng(977);
  std::vector<RandomBundle> out;
  for (int i = 0; i < 100; ++i) out.push_back(random_bundle(rng, 36));
  return out;
}

Outcome ac1() {
  Checker c;
  const Graph k4e = complete_minus_edge(4);
  const Bundle b = k4e_square();
  const Distance dv1 = vertex_fault_diameter(k4e, 1).value;
  const Distance de1 = edge_fault_diameter(k4e, 1).value;
  const Distance dv3 = vertex_fault_diameter(b.total(), 3).value;
  c.expect(dv1 == Distance(2), "DV1(K4-e)=" + str(dv1));
  c.expect(de1 == Distance(2), "DE1(K4-e)=" + str(de1));
  c.expect(dv3 == Distance(4), "DV3(square)=" + str(dv3));
  const BoundReport r = check_vfd_improved(b, 1, 1);
  c.expect(r.verdict == Verdict::HoldsWithEquality, std::string("verdict ") + std::string(to_string(r.verdict)));
  c.note("DV1(F)=" + str(dv1) + " DE1(F)=" + str(de1) + " DV3(G)=" + str(dv3) + " VFD_IMPROVED " +
         std::string(to_string(r.verdict)) + " " + str(*r.lhs) + "<=" + str(*r.rhs));
  return c.outcome();
}

Outcome ac2() {
  Checker c;
  const Graph c4 = cycle_graph(4);
  const Distance dv1 = vertex_fault_diameter(c4, 1).value;
  const Distance de1 = edge_fault_diameter(c4, 1).value;
  const Distance d01 = mixed_fault_diameter(c4, 0, 1).value;
  c.expect(dv1 == Distance(2), "DV1(C4)=" + str(dv1));
  c.expect(de1 == Distance(3), "DE1(C4)=" + str(de1));
  c.expect(d01 > dv1, "D(0,1)(C4) <= DV1(C4)");

  std::vector<Bundle> bundles;
  for (const auto& [name, t] : c4_twists()) bundles.push_back(twisted_torus(4, t));
  std::mt19937_64 rng(4);
  const auto autos = automorphisms(c4);
  std::uniform_int_distribution<std::size_t> pick(0, autos.size() - 1);
  for (int i = 0; i < 8; ++i) {
    std::vector<Twist> twists;
    for (const Edge& e : c4.edges()) {
      const auto im = autos[pick(rng)].images();
      twists.push_back({e.u, e.v, {im.begin(), im.end()}});
    }
    bundles.push_back(build_bundle(c4, c4, twists));
  }
  int unmet = 0;
  for (const Bundle& b : bundles) {
    const BoundReport r = check_vfd_improved(b, 1, 1);
    c.expect(r.verdict == Verdict::HypothesisUnmet, "a C4-over-C4 bundle passed the hypotheses");
    unmet += r.verdict == Verdict::HypothesisUnmet ? 1 : 0;
  }
  c.note("DV1(C4)=" + str(dv1) + " DE1(C4)=" + str(de1) + " D(0,1)(C4)=" + str(d01) + ", HYPOTHESIS_UNMET on " +
         std::to_string(unmet) + "/" + std::to_string(bundles.size()) + " C4-over-C4 bundles");
  return c.outcome();
}

Outcome ac3() {
  Checker c;
  const auto rows = cli::twisted_torus_report(4);
  std::string matching;
  for (const auto& row : rows) {
    if (row.matches_example()) matching += (matching.empty() ? "" : " ") + row.name;
    c.expect(row.baseline_vertex != Verdict::Violated, row.name + " baseline VIOLATED");
  }
  c.expect(rows.size() == 8, "expected 8 rows");
  c.expect(!matching.empty(), "no twist gives DV3=5 with a tight +1 bound");
  c.note("twists with DV3=5 and VFD_PLUS_ONE HOLDS_WITH_EQUALITY: " + matching);
  return c.outcome();
}

Outcome ac4() {
  Checker c;
  EnumerationOptions options;
  options.budget = 3'000'000;
  std::map<TheoremId, std::pair<int, int>> tally;  // applicable, held
  int skipped = 0;
  const auto bundles = theorem_suite_bundles();
  for (const RandomBundle& rb : bundles) {
    const Bundle& b = rb.bundle;
    std::vector<std::function<BoundReport()>> checks = {
        [&] { return check_vfd_improved(b, 1, 1, options); },
        [&] { return check_vfd_improved(b, 2, 1, options); },
        [&] { return check_vfd_improved(b, 1, 2, options); },
        [&] { return check_efd_improved(b, 1, 1, options); },
        [&] { return check_efd_improved(b, 0, 0, options); },
        [&] { return check_baseline_bounds(b, 1, 1, FaultKind::Vertex, options); },
        [&] { return check_baseline_bounds(b, 1, 0, FaultKind::Vertex, options); },
        [&] { return check_baseline_bounds(b, 1, 1, FaultKind::Edge, options); },
        [&] { return check_mixed_connectivity_bound(b, 1, 0, 1, 0, options); },
        [&] { return check_mixed_connectivity_bound(b, 0, 1, 0, 1, options); },
        [&] { return check_mixed_fd_bounds(b, 0, 1, Side::Fibre, options); },
        [&] { return check_mixed_fd_bounds(b, 1, 0, Side::Fibre, options); },
        [&] { return check_mixed_fd_bounds(b, 1, 0, Side::Base, options); },
        [&] { return check_mixed_fd_bounds(b, 1, 1, Side::Base, options); },
    };
    std::optional<BoundReport> improved;
    std::optional<BoundReport> plus_one;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      try {
        const BoundReport r = checks[i]();
        if (i == 0) improved = r;
        if (i == 5) plus_one = r;
        if (!r.hypotheses_hold()) continue;
        auto& [applicable, held] = tally[r.theorem];
        ++applicable;
        const bool ok = r.verdict == Verdict::Holds || r.verdict == Verdict::HoldsWithEquality;
        held += ok ? 1 : 0;
        c.expect(ok, rb.description + " " + std::string(to_string(r.theorem)) + " " +
                         std::string(to_string(r.verdict)));
      } catch (const BudgetExceeded&) {
        ++skipped;
      }
    }
    if (improved && plus_one && improved->hypotheses_hold() && improved->lhs && plus_one->rhs) {
      c.expect(*improved->lhs <= *plus_one->rhs, rb.description + " improved lhs exceeds the +1 rhs");
    }
  }
  c.expect(bundles.size() >= 100, "fewer than 100 bundles");
  const TheoremId ids[] = {TheoremId::VfdImproved, TheoremId::EfdImproved, TheoremId::VfdPlusOne,
                           TheoremId::EfdPlusOne,  TheoremId::MixedConn,   TheoremId::MixedFdFibre,
                           TheoremId::MixedFdBase};
  std::ostringstream os;
  os << bundles.size() << " bundles;";
  for (TheoremId id : ids) {
    const auto [applicable, held] = tally[id];
    os << ' ' << to_string(id) << ' ' << held << '/' << applicable;
    c.expect(applicable > 0, std::string(to_string(id)) + " never applicable");
  }
  os << "; " << skipped << " checks over budget";
  c.note(os.str());
  return c.outcome();
}

Outcome ac5() {
  Checker c;
  EnumerationOptions options;
  options.budget = 400'000;
  std::mt19937_64 rng(55);
  int implications = 0;
  int chains = 0;
  int skipped = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + trial % 7;
    const Graph g = random_connected_graph(rng, n, 0.45 + 0.01 * (trial % 20));
    const int kappa = vertex_connectivity(g);
    const int lambda = edge_connectivity(g);
    const std::string tag = "graph " + std::to_string(trial) + " (n=" + std::to_string(n) + ")";

    std::map<std::pair<int, int>, std::optional<Distance>> table;
    auto D = [&](int p, int q) -> std::optional<Distance> {
      const auto key = std::make_pair(p, q);
      if (auto it = table.find(key); it != table.end()) return it->second;
      std::optional<Distance> value;
      try {
        value = mixed_fault_diameter(g, p, q, options).value;
      } catch (const BudgetExceeded&) {
        ++skipped;
      }
      table[key] = value;
      return value;
    };

    // Monotone single-kind chains.
    for (int a = 0; a + 1 <= lambda - 1; ++a) {
      const auto lo = D(0, a);
      const auto hi = D(0, a + 1);
      if (lo && hi) c.expect(*lo <= *hi && hi->is_finite(), tag + " DE chain at " + std::to_string(a));
    }
    for (int a = 0; a + 1 <= kappa - 1; ++a) {
      const auto lo = D(a, 0);
      const auto hi = D(a + 1, 0);
      if (lo && hi) c.expect(*lo <= *hi && hi->is_finite(), tag + " DV chain at " + std::to_string(a));
    }

    for (int p = 0; p <= n - 2; ++p) {
      for (int q = 0; p + q <= lambda; ++q) {
        if (p + q == 0) continue;
        const auto dpq = D(p, q);
        if (!dpq) continue;
        const bool connected = dpq->is_finite();
        try {
          c.expect(connected == is_mixed_connected(g, p, q, options), tag + " connectivity disagrees with D");
        } catch (const BudgetExceeded&) {
          ++skipped;
        }
        if (p > 0 && connected) {
          const auto weaker = D(p - 1, q + 1);
          if (weaker) {
            ++implications;
            c.expect(weaker->is_finite(), tag + " (" + std::to_string(p) + "," + std::to_string(q) +
                                              ")+connected but not the shifted pair");
          }
        }
        if (p == 0 || !connected) continue;
        const int s = p + q;
        const int top = q > 0 ? p : p - 1;
        bool complete = true;
        std::vector<Distance> chain;
        for (int i = 0; i <= top; ++i) {
          const auto v = D(i, s - i);
          if (!v) {
            complete = false;
            break;
          }
          chain.push_back(*v);
        }
        if (!complete) continue;
        ++chains;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
          c.expect(chain[i] <= chain[i + 1], tag + " mixed chain breaks at (" + std::to_string(i) + "," +
                                                 std::to_string(s - static_cast<int>(i)) + ")");
        }
        if (q == 0) {
          const auto dv = D(p, 0);
          if (dv) c.expect(chain.back() <= *dv + Distance(1), tag + " D(p-1,1) exceeds DV_p + 1");
        }
      }
    }
  }
  c.note(std::to_string(implications) + " implications and " + std::to_string(chains) +
         " mixed chains checked over 50 graphs; " + std::to_string(skipped) + " quantities over budget");
  c.expect(implications > 0 && chains > 0, "nothing was checked");
  return c.outcome();
}

Outcome ac6() {
  Checker c;
  const auto result = cli::search_mixed_connectivity_gap(8, 1);
  c.expect(result.not_mixed_connected.has_value(), "no graph that fails (1,1)");
  c.expect(result.mixed_connected.has_value(), "no graph that survives (1,1)");
  for (const auto* g : {&result.not_mixed_connected, &result.mixed_connected}) {
    if (!*g) continue;
    c.expect((*g)->order() <= 8, "graph too large");
    c.expect(naive_kappa(**g) == 2, "kappa is not 2");
    c.expect(naive_lambda(**g) == 3, "lambda is not 3");
  }
  if (result.not_mixed_connected) {
    c.expect(!naive_mixed_connected(*result.not_mixed_connected, 1, 1), "claimed failure survives (1,1)");
  }
  if (result.mixed_connected) {
    c.expect(naive_mixed_connected(*result.mixed_connected, 1, 1), "claimed survivor fails (1,1)");
  }
  if (result.not_mixed_connected && result.mixed_connected) {
    c.note("n=" + std::to_string(result.not_mixed_connected->order()) + " graph with kappa=2 lambda=3 fails (1,1), n=" +
           std::to_string(result.mixed_connected->order()) + " graph survives; " +
           std::to_string(result.graphs_examined) + " graphs examined");
  }
  return c.outcome();
}

std::string missing_branches(const std::set<ProofBranch>& seen, Proof proof) {
  std::string out;
  for (ProofBranch br : branches_of(proof)) {
    if (!seen.contains(br)) out += " " + std::string(to_string(br));
  }
  return out;
}

Outcome ac7() {
  Checker c;
  const SweepStats s = sweep_vertex_router(k4e_square(), 1, 1);
  c.expect(s.failures == 0, s.first_failure);
  c.expect(s.instances == 560ULL * 13 * 12, "unexpected instance count");
  c.expect(s.longest <= Distance(4), "longest path " + str(s.longest));
  const std::string missing = missing_branches(s.branches, Proof::Vertex);
  c.expect(missing.empty(), "uncovered branches:" + missing);
  c.note(std::to_string(s.instances) + " instances, longest " + str(s.longest) + ", " +
         std::to_string(s.branches.size()) + "/" + std::to_string(branches_of(Proof::Vertex).size()) +
         " branches");
  return c.outcome();
}

Outcome ac8() {
  Checker c;
  const SweepStats grid = sweep_edge_router(build_bundle(cycle_graph(4), cycle_graph(4)), 0, 0);
  c.expect(grid.failures == 0, "C4xC4: " + grid.first_failure);
  c.expect(grid.longest <= Distance(4), "C4xC4 longest " + str(grid.longest));
  std::uint64_t sampled = 0;
  std::set<ProofBranch> seen = grid.branches;
  std::uint64_t seed = 8;
  for (const auto& [name, t] : c4_twists()) {
    const SweepStats s = sample_edge_router(twisted_torus(4, t), 1, 1, 10'000, seed++);
    sampled += s.instances;
    c.expect(s.failures == 0, name + ": " + s.first_failure);
    c.expect(s.longest <= Distance(6), name + " longest " + str(s.longest));
    seen.insert(s.branches.begin(), s.branches.end());
  }
  c.note(std::to_string(grid.instances) + " exhaustive C4xC4 instances, " + std::to_string(sampled) +
         " sampled twisted-torus instances, " + std::to_string(seen.size()) + "/" +
         std::to_string(branches_of(Proof::Edge).size()) + " edge branches seen");
  return c.outcome();
}

Outcome ac9() {
  Checker c;
  std::uint64_t lifts = 0;
  std::mt19937_64 rng(91);
  for (const RandomBundle& rb : lift_suite_bundles()) {
    const Bundle& b = rb.bundle;
    c.expect(validate_bundle(b), rb.description + " is not a valid bundle");
    const Graph& base = b.base();
    std::uniform_int_distribution<Vertex> pick(0, base.order() - 1);
    for (int sample = 0; sample < 30; ++sample) {
      const Vertex u = pick(rng);
      const Vertex v = pick(rng);
      const auto q = shortest_path(base, u, v, [&](Vertex w) { return w == u || w == v || rng() % 4 != 0; },
                                   [](std::size_t) { return true; });
      if (!q) continue;
      std::set<Vertex> used;
      for (Vertex x : b.fibre_vertices(u)) {
        const PathSeq lift = b.lift_path(*q, x);
        ++lifts;
        c.expect(lift.length() == q->length(), rb.description + " lift changes length");
        c.expect(is_path(b.total(), lift), rb.description + " lift is not a path");
        for (std::size_t i = 0; i < lift.vertices.size(); ++i) {
          c.expect(b.base_of(lift.vertices[i]) == q->vertices[i], rb.description + " lift does not project");
          c.expect(used.insert(lift.vertices[i]).second, rb.description + " lifts from distinct starts meet");
        }
      }
    }
  }
  c.note("100 valid bundles, " + std::to_string(lifts) + " lifts checked");
  return c.outcome();
}

Outcome ac10() {
  Checker c;
  std::vector<std::pair<std::string, Bundle>> all;
  for (auto& rb : theorem_suite_bundles()) all.emplace_back(rb.description, std::move(rb.bundle));
  for (auto& rb : lift_suite_bundles()) all.emplace_back(rb.description, std::move(rb.bundle));
  for (const auto& [name, t] : c4_twists()) all.emplace_back("torus(4," + name + ")", twisted_torus(4, t));
  all.emplace_back("product(K4-e,K4-e)", k4e_square());
  all.emplace_back("product(C4,C4)", build_bundle(cycle_graph(4), cycle_graph(4)));
  all.emplace_back("product(C4,K2)", build_bundle(cycle_graph(4), complete_graph(2)));

  EnumerationOptions options;
  options.budget = 3'000'000;
  int equal = 0;
  int unequal = 0;
  int unmet = 0;
  std::string rot1;
  for (const auto& [name, b] : all) {
    const Distance dg = diameter(b.total());
    const Distance sum = diameter(b.fibre()) + diameter(b.base());
    c.expect(dg <= sum, name + ": D(G)=" + str(dg) + " exceeds " + str(sum));
    const BoundReport r = check_diameter_decomposition(b, options);
    c.expect(r.verdict != Verdict::Violated, name + " DIAM_DECOMP VIOLATED");
    if (r.verdict == Verdict::HypothesisUnmet) {
      ++unmet;
      continue;
    }
    bool chain = false;
    for (const auto& [key, value] : r.quantities) {
      if (key == "equality_chain") chain = value == "true";
    }
    (chain ? equal : unequal) += 1;
    if (name == "torus(4,rot1)") {
      rot1 = "rot1 torus: D(G)=" + str(*r.lhs) + " vs D(F)+D(B)=" + str(*r.rhs) + ", equality " +
             (chain ? "holds" : "fails");
    }
  }
  c.note(std::to_string(all.size()) + " bundles, upper bound held on all; equality chain held on " +
         std::to_string(equal) + ", failed on " + std::to_string(unequal) + ", " + std::to_string(unmet) +
         " with a diameter-1 factor; " + rot1);
  return c.outcome();
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "K4-e square example", 5, ac1},
      {"AC2", "cycle example", 1, ac2},
      {"AC3", "twisted torus report", 60, ac3},
      {"AC4", "randomized theorem suite", 600, ac4},
      {"AC5", "mixed-connectivity chains", 300, ac5},
      {"AC6", "kappa/lambda gap search", 600, ac6},
      {"AC7", "vertex router, exhaustive", 900, ac7},
      {"AC8", "edge router", 600, ac8},
      {"AC9", "lifts and bundle validity", 60, ac9},
      {"AC10", "diameter decomposition", 600, ac10},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > cr.limit_seconds) {
      o.pass = false;
      o.detail += " | exceeded the " + std::to_string(static_cast<int>(cr.limit_seconds)) + " s limit";
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %s %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", cr.id, cr.title, seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu acceptance criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
