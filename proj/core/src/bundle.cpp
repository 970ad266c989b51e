#include "bundlefd/bundle.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "bundlefd/generators.hpp"
#include "bundlefd/graph_io.hpp"

namespace bundlefd {

Automorphism Automorphism::identity(int n) {
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Automorphism(std::move(images));
}

bool is_automorphism(const Graph& g, std::span<const Vertex> images) {
  if (images.size() != static_cast<std::size_t>(g.order())) return false;
  std::vector<bool> hit(images.size(), false);
  for (Vertex img : images) {
    if (!g.contains(img) || hit[img]) return false;
    hit[img] = true;
  }
  // A bijection that maps every edge onto an edge preserves non-adjacency too.
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return g.has_edge(images[e.u], images[e.v]); });
}

Automorphism Automorphism::of(const Graph& fibre, std::vector<Vertex> images) {
  if (!is_automorphism(fibre, images)) {
    std::ostringstream os;
    os << "permutation (";
    for (std::size_t i = 0; i < images.size(); ++i) os << (i ? " " : "") << images[i];
    os << ") is not an automorphism of the fibre";
    throw InvalidBundle(os.str());
  }
  return Automorphism(std::move(images));
}

Automorphism Automorphism::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (std::size_t f = 0; f < images_.size(); ++f) inv[images_[f]] = static_cast<Vertex>(f);
  return Automorphism(std::move(inv));
}

Automorphism Automorphism::then(const Automorphism& next) const {
  std::vector<Vertex> out(images_.size());
  for (std::size_t f = 0; f < images_.size(); ++f) out[f] = next(images_[f]);
  return Automorphism(std::move(out));
}

bool Automorphism::is_identity() const {
  for (std::size_t f = 0; f < images_.size(); ++f) {
    if (images_[f] != static_cast<Vertex>(f)) return false;
  }
  return true;
}

std::vector<Automorphism> automorphisms(const Graph& g) {
  const int n = g.order();
  std::vector<Automorphism> found;
  std::vector<Vertex> images(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto extend = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      found.push_back(Automorphism::of(g, images));
      return;
    }
    for (Vertex img = 0; img < n; ++img) {
      if (used[img] || g.degree(img) != g.degree(v)) continue;
      bool consistent = true;
      for (Vertex w = 0; w < v && consistent; ++w) consistent = g.has_edge(v, w) == g.has_edge(img, images[w]);
      if (!consistent) continue;
      images[v] = img;
      used[img] = true;
      self(self, v + 1);
      used[img] = false;
    }
    images[v] = -1;
  };
  extend(extend, 0);
  return found;
}

Automorphism cycle_rotation(int n, int k) {
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  for (int f = 0; f < n; ++f) images[f] = ((f + k) % n + n) % n;
  return Automorphism::of(cycle_graph(n), std::move(images));
}

Automorphism cycle_reflection(int n, int k) {
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  for (int f = 0; f < n; ++f) images[f] = ((k - f) % n + n) % n;
  return Automorphism::of(cycle_graph(n), std::move(images));
}

const Automorphism& Bundle::twist(Vertex u, Vertex v) const {
  const auto id = base_.edge_id(u, v);
  if (!id) throw InvalidArgument("no base edge " + std::to_string(u) + "-" + std::to_string(v));
  return u < v ? forward_[*id] : backward_[*id];
}

Element Bundle::projection(const Element& element) const {
  if (const auto* x = std::get_if<Vertex>(&element)) {
    if (!total_.contains(*x)) throw InvalidArgument("projection: unknown vertex " + std::to_string(*x));
    return base_of(*x);
  }
  const Edge& e = std::get<Edge>(element);
  if (!total_.has_edge(e.u, e.v)) {
    std::ostringstream os;
    os << "projection: unknown edge " << e;
    throw InvalidArgument(os.str());
  }
  if (is_degenerate(e)) return base_of(e.u);
  return Edge(base_of(e.u), base_of(e.v));
}

std::vector<Vertex> Bundle::fibre_vertices(Vertex u) const {
  if (!base_.contains(u)) throw InvalidArgument("unknown base vertex " + std::to_string(u));
  std::vector<Vertex> out(static_cast<std::size_t>(fibre_.order()));
  for (Vertex f = 0; f < fibre_.order(); ++f) out[f] = encode({u, f});
  return out;
}

Graph Bundle::fibre_of(Vertex u) const {
  const auto vertices = fibre_vertices(u);
  return induced_subgraph(total_, vertices);
}

PathSeq Bundle::lift_path(const PathSeq& q, Vertex x) const {
  if (!is_path(base_, q)) throw InvalidArgument("lift_path: not a path in the base graph");
  if (!total_.contains(x)) throw InvalidArgument("lift_path: unknown total vertex " + std::to_string(x));
  if (base_of(x) != q.front()) throw InvalidArgument("lift_path: start vertex does not project to the path start");
  PathSeq lift{{x}};
  Vertex f = decode(x).fibre;
  for (std::size_t i = 1; i < q.vertices.size(); ++i) {
    f = twist(q.vertices[i - 1], q.vertices[i])(f);
    lift.vertices.push_back(encode({q.vertices[i], f}));
  }
  return lift;
}

Bundle Bundle::from_parts(Graph base, Graph fibre, std::vector<Automorphism> edge_twists, Graph total) {
  if (edge_twists.size() != base.size()) throw InvalidBundle("one twist per base edge is required");
  if (fibre.order() == 0) throw InvalidBundle("empty fibre");
  Bundle b;
  b.base_ = std::move(base);
  b.fibre_ = std::move(fibre);
  b.total_ = std::move(total);
  b.backward_.reserve(edge_twists.size());
  for (const Automorphism& phi : edge_twists) b.backward_.push_back(phi.inverse());
  b.forward_ = std::move(edge_twists);
  return b;
}

Bundle build_bundle(Graph base, Graph fibre, std::span<const Twist> twists) {
  if (base.order() == 0 || fibre.order() == 0) throw InvalidBundle("base and fibre must be nonempty");
  const int nf = fibre.order();
  std::vector<std::optional<Automorphism>> forward(base.size());
  for (const Twist& t : twists) {
    const auto id = base.edge_id(t.from, t.to);
    if (!id) {
      throw InvalidBundle("twist on " + std::to_string(t.from) + "-" + std::to_string(t.to) +
                          ", which is not a base edge");
    }
    Automorphism phi = Automorphism::of(fibre, t.images);
    if (t.from > t.to) phi = phi.inverse();
    if (forward[*id] && !(*forward[*id] == phi)) {
      throw InvalidBundle("inconsistent twists on base edge " + std::to_string(t.from) + "-" +
                          std::to_string(t.to) + ": the two directions must be mutually inverse");
    }
    forward[*id] = std::move(phi);
  }
  std::vector<Automorphism> edge_twists;
  edge_twists.reserve(base.size());
  for (auto& phi : forward) edge_twists.push_back(phi ? std::move(*phi) : Automorphism::identity(nf));

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(base.order()) * fibre.size() + base.size() * static_cast<std::size_t>(nf));
  for (Vertex u = 0; u < base.order(); ++u) {
    for (const Edge& e : fibre.edges()) edges.emplace_back(u * nf + e.u, u * nf + e.v);
  }
  for (std::size_t id = 0; id < base.size(); ++id) {
    const Edge& e = base.edge(id);
    for (Vertex f = 0; f < nf; ++f) edges.emplace_back(e.u * nf + f, e.v * nf + edge_twists[id](f));
  }
  Graph total(base.order() * nf, std::move(edges));
  return Bundle::from_parts(std::move(base), std::move(fibre), std::move(edge_twists), std::move(total));
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  if (g1.order() == 0 || g2.order() == 0) throw InvalidArgument("cartesian_product: empty factor");
  const int n2 = g2.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g1.order(); ++u) {
    for (const Edge& e : g2.edges()) edges.emplace_back(u * n2 + e.u, u * n2 + e.v);
  }
  for (const Edge& e : g1.edges()) {
    for (Vertex w = 0; w < n2; ++w) edges.emplace_back(e.u * n2 + w, e.v * n2 + w);
  }
  return Graph(g1.order() * n2, std::move(edges));
}

bool validate_bundle(const Bundle& b) {
  const Graph& base = b.base();
  const Graph& fibre = b.fibre();
  const Graph& total = b.total();
  const int nf = fibre.order();
  if (total.order() != base.order() * nf) return false;
  for (std::size_t id = 0; id < base.size(); ++id) {
    const Edge& e = base.edge(id);
    if (!is_automorphism(fibre, b.twist(e.u, e.v).images())) return false;
  }
  // Every total edge must be one the twist data prescribes; the counts then
  // force equality with the prescribed edge set.
  std::vector<std::size_t> fibre_edges(static_cast<std::size_t>(base.order()), 0);
  std::vector<std::size_t> over_edge(base.size(), 0);
  for (const Edge& e : total.edges()) {
    const BundleVertex a = b.decode(e.u);
    const BundleVertex c = b.decode(e.v);
    if (a.base == c.base) {
      if (!fibre.has_edge(a.fibre, c.fibre)) return false;
      ++fibre_edges[a.base];
      continue;
    }
    const auto id = base.edge_id(a.base, c.base);
    if (!id) return false;
    if (b.twist(a.base, c.base)(a.fibre) != c.fibre) return false;
    ++over_edge[*id];
  }
  const bool fibres_ok = std::all_of(fibre_edges.begin(), fibre_edges.end(),
                                     [&](std::size_t count) { return count == fibre.size(); });
  const bool edges_ok = std::all_of(over_edge.begin(), over_edge.end(),
                                    [&](std::size_t count) { return count == static_cast<std::size_t>(nf); });
  return fibres_ok && edges_ok;
}

Bundle twisted_torus(int n, const Automorphism& twist) {
  if (n < 3) throw InvalidArgument("twisted_torus needs n >= 3");
  Graph cycle = cycle_graph(n);
  if (!is_automorphism(cycle, twist.images())) throw InvalidBundle("twist is not an automorphism of C_n");
  const Twist wrap{n - 1, 0, {twist.images().begin(), twist.images().end()}};
  return build_bundle(cycle, cycle, std::span<const Twist>(&wrap, 1));
}

namespace {

enum class Section { None, Base, Fibre, Twists };

}  // namespace

Bundle parse_bundle(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<TextLine> base_lines, fibre_lines;
  std::vector<TextLine> twist_lines;
  Section section = Section::None;
  bool seen_base = false, seen_fibre = false;
  for (const TextLine& line : lines) {
    const auto tokens = tokenize(line.text);
    if (tokens.size() == 1 && (tokens[0].text == "BASE" || tokens[0].text == "FIBRE" || tokens[0].text == "TWISTS")) {
      const std::string& name = tokens[0].text;
      if ((name == "BASE" && seen_base) || (name == "FIBRE" && seen_fibre)) {
        throw ParseError("duplicate section " + name, line.number, tokens[0].column);
      }
      section = name == "BASE" ? Section::Base : name == "FIBRE" ? Section::Fibre : Section::Twists;
      seen_base |= section == Section::Base;
      seen_fibre |= section == Section::Fibre;
      continue;
    }
    switch (section) {
      case Section::None:
        if (!tokens.empty() && tokens[0].text[0] != '#') {
          throw ParseError("expected section header BASE", line.number, tokens[0].column);
        }
        break;
      case Section::Base: base_lines.push_back(line); break;
      case Section::Fibre: fibre_lines.push_back(line); break;
      case Section::Twists: twist_lines.push_back(line); break;
    }
  }
  const std::size_t last = lines.empty() ? 1 : lines.back().number;
  if (!seen_base) throw ParseError("missing BASE section", last, 1);
  if (!seen_fibre) throw ParseError("missing FIBRE section", last, 1);
  Graph base = parse_edge_list(std::span<const TextLine>(base_lines));
  Graph fibre = parse_edge_list(std::span<const TextLine>(fibre_lines));
  if (base.order() == 0 || fibre.order() == 0) throw ParseError("base and fibre must be nonempty", last, 1);

  std::vector<Twist> twists;
  std::map<Edge, std::pair<Automorphism, std::size_t>> seen;
  for (const TextLine& line : twist_lines) {
    const auto tokens = tokenize(line.text);
    if (tokens.empty() || tokens[0].text[0] == '#') continue;
    if (tokens.size() < 3 || tokens[2].text != ":") {
      throw ParseError("expected 'u v : p0 ... p(k-1)'", line.number, tokens.front().column);
    }
    const auto u = static_cast<Vertex>(parse_integer(tokens[0], line.number));
    const auto v = static_cast<Vertex>(parse_integer(tokens[1], line.number));
    if (!base.has_edge(u, v)) throw ParseError("twist on a pair that is not a base edge", line.number, tokens[0].column);
    if (tokens.size() - 3 != static_cast<std::size_t>(fibre.order())) {
      throw ParseError("expected " + std::to_string(fibre.order()) + " images", line.number,
                       tokens.size() > 3 ? tokens[3].column : tokens[2].column);
    }
    std::vector<Vertex> images;
    for (std::size_t i = 3; i < tokens.size(); ++i) {
      images.push_back(static_cast<Vertex>(parse_integer(tokens[i], line.number)));
    }
    if (!is_automorphism(fibre, images)) {
      throw ParseError("twist is not an automorphism of the fibre", line.number, tokens[3].column);
    }
    Automorphism phi = Automorphism::of(fibre, images);
    if (u > v) phi = phi.inverse();
    const Edge key(u, v);
    if (auto it = seen.find(key); it != seen.end() && !(it->second.first == phi)) {
      throw ParseError("twist contradicts line " + std::to_string(it->second.second) +
                           "; opposite directions must be inverse",
                       line.number, tokens[0].column);
    }
    seen.insert_or_assign(key, std::make_pair(phi, line.number));
    twists.push_back({u, v, std::move(images)});
  }
  return build_bundle(std::move(base), std::move(fibre), twists);
}

Bundle read_bundle(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_bundle(text);
}

void write_bundle(std::ostream& out, const Bundle& b) {
  out << "BASE\n";
  write_edge_list(out, b.base());
  out << "FIBRE\n";
  write_edge_list(out, b.fibre());
  out << "TWISTS\n";
  for (const Edge& e : b.base().edges()) {
    const Automorphism& phi = b.twist(e.u, e.v);
    if (phi.is_identity()) continue;
    out << e.u << ' ' << e.v << " :";
    for (Vertex img : phi.images()) out << ' ' << img;
    out << '\n';
  }
}

std::string to_bundle_text(const Bundle& b) {
  std::ostringstream os;
  write_bundle(os, b);
  return os.str();
}

}  // namespace bundlefd
