#include "bundlefd/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "bundlefd/connectivity.hpp"
#include "bundlefd/fault_metrics.hpp"

namespace bundlefd {
namespace {

std::string show(const std::optional<Distance>& d) { return d ? d->to_string() : "undefined"; }

std::optional<Distance> sum(std::optional<Distance> x, std::optional<Distance> y) {
  if (!x || !y) return std::nullopt;
  return *x + *y;
}

std::optional<Distance> larger(std::optional<Distance> x, std::optional<Distance> y) {
  if (!x || !y) return std::nullopt;
  return std::max(*x, *y);
}

class ReportBuilder {
 public:
  ReportBuilder(TheoremId id, const EnumerationOptions& options) : options_(options) { report_.theorem = id; }

  void parameter(std::string name, int value) { report_.parameters.emplace_back(std::move(name), value); }

  void hypothesis(std::string name, bool holds) { report_.hypotheses.push_back({std::move(name), holds}); }

  void quantity(std::string name, std::string value) { report_.quantities.emplace_back(std::move(name), std::move(value)); }

  void observe(std::string note) { report_.observations.push_back(std::move(note)); }

  /// D_(p,q)(g), or nothing when p or q exceeds what g can lose.
  std::optional<FaultDiameterResult> fault_diameter(const std::string& name, const Graph& g, int p, int q) {
    std::optional<FaultDiameterResult> result;
    if (p >= 0 && q >= 0 && p <= g.order() && q <= static_cast<int>(g.size())) {
      result = mixed_fault_diameter(g, p, q, options_);
    }
    quantity(name, result ? result->value.to_string() : "undefined");
    return result;
  }

  std::optional<Distance> value(const std::string& name, const Graph& g, int p, int q) {
    auto result = fault_diameter(name, g, p, q);
    if (!result) return std::nullopt;
    return result->value;
  }

  Distance plain_diameter(const std::string& name, const Graph& g) {
    const Distance d = diameter(g);
    quantity(name, d.to_string());
    return d;
  }

  int integer(const std::string& name, int value) {
    quantity(name, std::to_string(value));
    return value;
  }

  BoundReport finish(std::optional<FaultDiameterResult> lhs, std::optional<Distance> rhs) {
    if (lhs) {
      report_.lhs = lhs->value;
      report_.witness = lhs->witness;
      report_.witness_pair = lhs->witness_pair;
    }
    report_.rhs = rhs;
    if (!report_.hypotheses_hold()) {
      report_.verdict = Verdict::HypothesisUnmet;
    } else if (!report_.lhs || !report_.rhs) {
      report_.verdict = Verdict::HypothesisUnmet;
      observe("a side of the inequality is undefined for these parameters");
    } else if (*report_.lhs < *report_.rhs) {
      report_.verdict = Verdict::Holds;
    } else if (*report_.lhs == *report_.rhs) {
      report_.verdict = Verdict::HoldsWithEquality;
    } else {
      report_.verdict = Verdict::Violated;
    }
    return std::move(report_);
  }

 private:
  const EnumerationOptions& options_;
  BoundReport report_;
};

std::optional<Distance> at_least(std::optional<Distance> d, std::int64_t bound) {
  return d && *d >= Distance(bound) ? d : std::nullopt;
}

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::VfdImproved: return "VFD_IMPROVED";
    case TheoremId::EfdImproved: return "EFD_IMPROVED";
    case TheoremId::VfdPlusOne: return "VFD_PLUS_ONE";
    case TheoremId::EfdPlusOne: return "EFD_PLUS_ONE";
    case TheoremId::MixedConn: return "MIXED_CONN";
    case TheoremId::MixedFdFibre: return "MIXED_FD_FIBRE";
    case TheoremId::MixedFdBase: return "MIXED_FD_BASE";
    case TheoremId::DiamDecomp: return "DIAM_DECOMP";
  }
  return "UNKNOWN";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::HoldsWithEquality: return "HOLDS_WITH_EQUALITY";
    case Verdict::Violated: return "VIOLATED";
    case Verdict::HypothesisUnmet: return "HYPOTHESIS_UNMET";
  }
  return "UNKNOWN";
}

bool BoundReport::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
}

BoundReport check_vfd_improved(const Bundle& b, int a, int bb, const EnumerationOptions& options) {
  if (a <= 0 || bb <= 0) throw InvalidArgument("the improved vertex bound needs a > 0 and bb > 0");
  const Graph& F = b.fibre();
  const Graph& B = b.base();
  ReportBuilder r(TheoremId::VfdImproved, options);
  r.parameter("a", a);
  r.parameter("b", bb);

  const int kF = r.integer("kappa(F)", vertex_connectivity(F));
  const int kB = r.integer("kappa(B)", vertex_connectivity(B));
  r.parameter("k_F", kF);
  r.parameter("k_B", kB);
  r.hypothesis("F is (a+1)-connected", kF >= a + 1);
  r.hypothesis("B is (b+1)-connected", kB >= bb + 1);

  const auto dvF = r.value("DV_a(F)", F, a, 0);
  const auto dmF = r.value("D_(a-1,1)(F)", F, a - 1, 1);
  const auto dvB = r.value("DV_b(B)", B, bb, 0);
  const auto dmB = r.value("D_(b-1,1)(B)", B, bb - 1, 1);
  r.hypothesis("D_(a-1,1)(F) <= DV_a(F)", dvF && dmF && *dmF <= *dvF);
  r.hypothesis("D_(b-1,1)(B) <= DV_b(B)", dvB && dmB && *dmB <= *dvB);

  auto lhs = r.fault_diameter("DV_(a+b+1)(G)", b.total(), a + bb + 1, 0);
  return r.finish(std::move(lhs), sum(dvF, dvB));
}

BoundReport check_efd_improved(const Bundle& b, int a, int bb, const EnumerationOptions& options) {
  if (a < 0 || bb < 0) throw InvalidArgument("the improved edge bound needs a >= 0 and bb >= 0");
  const Graph& F = b.fibre();
  const Graph& B = b.base();
  ReportBuilder r(TheoremId::EfdImproved, options);
  r.parameter("a", a);
  r.parameter("b", bb);

  const int lF = r.integer("lambda(F)", edge_connectivity(F));
  const int lB = r.integer("lambda(B)", edge_connectivity(B));
  r.parameter("k_F", lF);
  r.parameter("k_B", lB);
  r.hypothesis("F is (a+1)-edge-connected", lF >= a + 1);
  r.hypothesis("B is (b+1)-edge-connected", lB >= bb + 1);

  const auto deF = r.value("DE_a(F)", F, 0, a);
  const auto deB = r.value("DE_b(B)", B, 0, bb);
  r.hypothesis("DE_a(F) >= 2", at_least(deF, 2).has_value());
  r.hypothesis("DE_b(B) >= 2", at_least(deB, 2).has_value());

  auto lhs = r.fault_diameter("DE_(a+b+1)(G)", b.total(), 0, a + bb + 1);
  return r.finish(std::move(lhs), sum(deF, deB));
}

BoundReport check_baseline_bounds(const Bundle& b, int a, int bb, FaultKind kind, const EnumerationOptions& options) {
  if (a < 0 || bb < 0) throw InvalidArgument("fault counts must be non-negative");
  const Graph& F = b.fibre();
  const Graph& B = b.base();
  const bool vertex = kind == FaultKind::Vertex;
  ReportBuilder r(vertex ? TheoremId::VfdPlusOne : TheoremId::EfdPlusOne, options);
  r.parameter("a", a);
  r.parameter("b", bb);

  const std::string conn = vertex ? "kappa" : "lambda";
  const int kF = r.integer(conn + "(F)", vertex ? vertex_connectivity(F) : edge_connectivity(F));
  const int kB = r.integer(conn + "(B)", vertex ? vertex_connectivity(B) : edge_connectivity(B));
  r.parameter("k_F", kF);
  r.parameter("k_B", kB);
  r.hypothesis("a < " + conn + "(F)", a < kF);
  r.hypothesis("b < " + conn + "(B)", bb < kB);

  const std::string tag = vertex ? "DV" : "DE";
  auto faults = [vertex](int n) { return vertex ? std::pair{n, 0} : std::pair{0, n}; };
  const auto dF = r.value(tag + "_a(F)", F, faults(a).first, faults(a).second);
  const auto dB = r.value(tag + "_b(B)", B, faults(bb).first, faults(bb).second);
  const auto total = faults(a + bb + 1);
  auto lhs = r.fault_diameter(tag + "_(a+b+1)(G)", b.total(), total.first, total.second);
  return r.finish(std::move(lhs), sum(sum(dF, dB), Distance(1)));
}

BoundReport check_mixed_connectivity_bound(const Bundle& b, int pF, int qF, int pB, int qB,
                                           const EnumerationOptions& options) {
  if (pF < 0 || qF < 0 || pB < 0 || qB < 0) throw InvalidArgument("fault counts must be non-negative");
  ReportBuilder r(TheoremId::MixedConn, options);
  r.parameter("p_F", pF);
  r.parameter("q_F", qF);
  r.parameter("p_B", pB);
  r.parameter("q_B", qB);

  auto mixed_connected = [&](const Graph& g, int p, int q) {
    return g.order() >= 2 && is_mixed_connected(g, p, q, options);
  };
  r.hypothesis("F is (p_F,q_F)+connected", mixed_connected(b.fibre(), pF, qF));
  r.hypothesis("B is (p_B,q_B)+connected", mixed_connected(b.base(), pB, qB));

  auto lhs = r.fault_diameter("D_(p_F+p_B+1,q_F+q_B)(G)", b.total(), pF + pB + 1, qF + qB);
  auto report = r.finish(std::move(lhs), Distance::infinite());
  if (report.verdict == Verdict::HoldsWithEquality) report.verdict = Verdict::Violated;
  return report;
}

BoundReport check_mixed_fd_bounds(const Bundle& b, int p, int q, Side side, const EnumerationOptions& options) {
  if (p < 0 || q < 0 || p + q == 0) throw InvalidArgument("the mixed bound needs p, q >= 0 and p + q > 0");
  const bool fibre = side == Side::Fibre;
  const Graph& faulty = fibre ? b.fibre() : b.base();
  const Graph& other = fibre ? b.base() : b.fibre();
  const std::string s = fibre ? "F" : "B";
  const std::string o = fibre ? "B" : "F";
  ReportBuilder r(fibre ? TheoremId::MixedFdFibre : TheoremId::MixedFdBase, options);
  r.parameter("p", p);
  r.parameter("q", q);

  r.hypothesis(s + " is (p,q)+connected", faulty.order() >= 2 && is_mixed_connected(faulty, p, q, options));
  const Distance dOther = r.plain_diameter("D(" + o + ")", other);
  r.hypothesis("D(" + o + ") > 1", dOther.is_finite() && dOther > Distance(1));

  std::optional<Distance> sideTerm;
  std::optional<FaultDiameterResult> lhs;
  if (q > 0) {
    sideTerm = r.value("D_(p,q)(" + s + ")", faulty, p, q);
    lhs = r.fault_diameter("D_(p+1,q)(G)", b.total(), p + 1, q);
  } else {
    sideTerm = larger(r.value("DV_p(" + s + ")", faulty, p, 0), r.value("D_(p-1,1)(" + s + ")", faulty, p - 1, 1));
    lhs = r.fault_diameter("DV_(p+1)(G)", b.total(), p + 1, 0);
  }
  return r.finish(std::move(lhs), sum(sideTerm, dOther));
}

BoundReport check_diameter_decomposition(const Bundle& b, const EnumerationOptions& options) {
  ReportBuilder r(TheoremId::DiamDecomp, options);
  const Distance dF = r.plain_diameter("D(F)", b.fibre());
  const Distance dB = r.plain_diameter("D(B)", b.base());
  r.hypothesis("D(F) > 1", dF.is_finite() && dF > Distance(1));
  r.hypothesis("D(B) > 1", dB.is_finite() && dB > Distance(1));

  auto lhs = r.fault_diameter("D(G)", b.total(), 0, 0);
  const Distance rhs = dF + dB;
  auto report = r.finish(std::move(lhs), rhs);
  if (report.verdict == Verdict::HypothesisUnmet) return report;

  // The equality chain is informational; the faulted diameters are only
  // computed when they fit the enumeration budget.
  std::optional<Distance> dv1;
  std::optional<Distance> de1;
  try {
    dv1 = vertex_fault_diameter(b.total(), 1, options).value;
    de1 = edge_fault_diameter(b.total(), 1, options).value;
  } catch (const BudgetExceeded& e) {
    report.observations.emplace_back(std::string("equality chain skipped: ") + e.what());
  }
  report.quantities.emplace_back("DV_1(G)", show(dv1));
  report.quantities.emplace_back("DE_1(G)", show(de1));
  if (dv1 && de1) {
    const Distance dG = *report.lhs;
    const bool chain = *dv1 == dG && *de1 == dG && dG == rhs;
    report.quantities.emplace_back("equality_chain", chain ? "true" : "false");
    if (!chain) {
      report.observations.push_back("DV_1(G)=" + dv1->to_string() + ", DE_1(G)=" + de1->to_string() +
                                    ", D(G)=" + dG.to_string() + " differ from D(F)+D(B)=" + rhs.to_string());
    }
  }
  return report;
}

namespace {

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out;
}

std::string join_edges(const std::vector<Edge>& es) {
  std::string out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    out += (i ? "," : "") + std::to_string(es[i].u) + "-" + std::to_string(es[i].v);
  }
  return out;
}

}  // namespace

std::string to_key_value(const BoundReport& report) {
  std::ostringstream out;
  out << "theorem=" << to_string(report.theorem) << '\n';
  for (const auto& [name, value] : report.parameters) out << "param." << name << '=' << value << '\n';
  for (const auto& h : report.hypotheses) out << "hypothesis." << h.name << '=' << (h.holds ? "holds" : "fails") << '\n';
  out << "lhs=" << show(report.lhs) << '\n';
  out << "rhs=" << show(report.rhs) << '\n';
  out << "verdict=" << to_string(report.verdict) << '\n';
  out << "witness.vertices=" << join_vertices(report.witness.vertices) << '\n';
  out << "witness.edges=" << join_edges(report.witness.edges) << '\n';
  if (report.witness_pair) {
    out << "witness.pair=" << report.witness_pair->first << ',' << report.witness_pair->second << '\n';
  }
  for (const auto& [name, value] : report.quantities) out << "quantity." << name << '=' << value << '\n';
  for (const auto& note : report.observations) out << "observation=" << note << '\n';
  out << '\n';
  return out.str();
}

std::string to_json(const BoundReport& report) {
  using nlohmann::json;
  auto distance = [](const std::optional<Distance>& d) -> json {
    if (!d) return nullptr;
    if (d->is_infinite()) return "inf";
    return d->value();
  };
  json doc;
  doc["theorem"] = to_string(report.theorem);
  doc["parameters"] = json::object();
  for (const auto& [name, value] : report.parameters) doc["parameters"][name] = value;
  doc["hypotheses"] = json::array();
  for (const auto& h : report.hypotheses) doc["hypotheses"].push_back({{"name", h.name}, {"holds", h.holds}});
  doc["lhs"] = distance(report.lhs);
  doc["rhs"] = distance(report.rhs);
  doc["verdict"] = to_string(report.verdict);
  json edges = json::array();
  for (const Edge& e : report.witness.edges) edges.push_back({e.u, e.v});
  doc["witness"] = {{"vertices", report.witness.vertices}, {"edges", edges}};
  doc["witness_pair"] = report.witness_pair ? json{report.witness_pair->first, report.witness_pair->second} : json();
  doc["quantities"] = json::object();
  for (const auto& [name, value] : report.quantities) doc["quantities"][name] = value;
  doc["observations"] = report.observations;
  return doc.dump(2);
}

}  // namespace bundlefd
