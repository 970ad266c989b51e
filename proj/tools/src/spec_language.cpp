#include "bundlefd_cli/spec_language.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <bundlefd/errors.hpp>
#include <bundlefd/generators.hpp>
#include <bundlefd/graph_io.hpp>

namespace bundlefd::cli {
namespace {

struct Node {
  std::size_t column = 1;
  std::string head;  // identifier, or "file" for file: references
  std::string path;
  std::vector<Node> args;
  std::optional<std::vector<int>> list;
  std::optional<std::pair<int, int>> at;  // @u-v suffix
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node parse() {
    Node node = term();
    skip_spaces();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 1, pos_ + 1); }

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_spaces();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_'; }

  int integer() {
    skip_spaces();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (start == pos_ || ec != std::errc()) {
      pos_ = start;
      fail("expected a non-negative integer");
    }
    (void)ptr;
    return value;
  }

  Node term() {
    skip_spaces();
    Node node;
    node.column = pos_ + 1;
    if (text_.substr(pos_, 5) == "file:") {
      pos_ += 5;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
      node.head = "file";
      node.path = std::string(text_.substr(start, pos_ - start));
      if (node.path.empty()) fail("empty file path");
      return node;
    }
    if (accept('[')) {
      node.list.emplace();
      if (!accept(']')) {
        do node.list->push_back(integer());
        while (accept(','));
        expect(']');
      }
    } else {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      if (start == pos_) fail("expected a graph, bundle or twist expression");
      node.head = std::string(text_.substr(start, pos_ - start));
      if (accept('(')) {
        do node.args.push_back(term());
        while (accept(','));
        expect(')');
      }
    }
    if (accept('@')) {
      const int u = integer();
      expect('-');
      node.at = std::pair{u, integer()};
    }
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void fail_at(const Node& node, const std::string& message) { throw ParseError(message, 1, node.column); }

int as_integer(const Node& node) {
  int value = 0;
  const auto& h = node.head;
  const auto [ptr, ec] = std::from_chars(h.data(), h.data() + h.size(), value);
  if (h.empty() || ec != std::errc() || ptr != h.data() + h.size()) fail_at(node, "expected an integer");
  return value;
}

void expect_arity(const Node& node, std::size_t n) {
  if (node.args.size() != n) {
    fail_at(node, node.head + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
  }
}

std::string read_file(const Node& node) {
  std::ifstream in(node.path);
  if (!in) fail_at(node, "cannot open " + node.path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Bundle evaluate_bundle(const Node& node);

Graph evaluate_graph(const Node& node) {
  if (node.list) fail_at(node, "a list is not a graph");
  if (node.head == "file") return parse_edge_list(read_file(node));
  if (node.head == "product" || node.head == "bundle" || node.head == "torus") return evaluate_bundle(node).total();
  if (node.head == "circulant") {
    if (node.args.empty()) fail_at(node, "circulant needs an order");
    const int n = as_integer(node.args[0]);
    std::vector<int> jumps;
    for (std::size_t i = 1; i < node.args.size(); ++i) {
      const Node& arg = node.args[i];
      if (arg.list) {
        jumps.insert(jumps.end(), arg.list->begin(), arg.list->end());
      } else {
        jumps.push_back(as_integer(arg));
      }
    }
    return circulant(n, jumps);
  }
  if (!node.args.empty()) fail_at(node, "unknown graph constructor '" + node.head + "'");

  static const std::regex named(R"(([CKPQ])(\d+)(-e)?)");
  std::smatch m;
  if (!std::regex_match(node.head, m, named)) fail_at(node, "unknown graph '" + node.head + "'");
  const int n = std::stoi(m[2].str());
  const bool minus_edge = m[3].matched;
  if (minus_edge && m[1] != "K") fail_at(node, "only complete graphs take the -e suffix");
  switch (m[1].str()[0]) {
    case 'C': return cycle_graph(n);
    case 'K': return minus_edge ? complete_minus_edge(n) : complete_graph(n);
    case 'P': return path_graph(n);
    default: return hypercube(n);
  }
}

Automorphism evaluate_twist(const Node& node, const Graph& fibre) {
  if (node.list) return Automorphism::of(fibre, *node.list);
  static const std::regex named(R"((id|rot|refl)(\d*))");
  std::smatch m;
  if (!node.args.empty() || !std::regex_match(node.head, m, named)) fail_at(node, "unknown twist '" + node.head + "'");
  if (m[1] == "id") {
    if (m[2].length() != 0) fail_at(node, "unknown twist '" + node.head + "'");
    return Automorphism::identity(fibre.order());
  }
  if (m[2].length() == 0) fail_at(node, m[1].str() + " needs a step, e.g. " + m[1].str() + "1");
  const int k = std::stoi(m[2].str());
  const Automorphism candidate = m[1] == "rot" ? cycle_rotation(fibre.order(), k) : cycle_reflection(fibre.order(), k);
  return Automorphism::of(fibre, {candidate.images().begin(), candidate.images().end()});
}

std::pair<Vertex, Vertex> default_twist_edge(const Graph& base) {
  for (Vertex u = base.order() - 1; u >= 0; --u) {
    if (base.degree(u) > 0) return {u, base.neighbors(u).front()};
  }
  throw InvalidBundle("the base graph has no edges to carry a twist");
}

Bundle evaluate_bundle(const Node& node) {
  if (node.head == "file") {
    const std::string text = read_file(node);
    return parse_bundle(text);
  }
  if (node.head == "product") {
    expect_arity(node, 2);
    return build_bundle(evaluate_graph(node.args[0]), evaluate_graph(node.args[1]));
  }
  if (node.head == "bundle" || node.head == "torus") {
    Graph base;
    Graph fibre;
    if (node.head == "bundle") {
      expect_arity(node, 3);
      base = evaluate_graph(node.args[0]);
      fibre = evaluate_graph(node.args[1]);
    } else {
      expect_arity(node, 2);
      const int n = as_integer(node.args[0]);
      base = cycle_graph(n);
      fibre = cycle_graph(n);
    }
    const Node& twist_node = node.args.back();
    const Automorphism phi = evaluate_twist(twist_node, fibre);
    const auto [u, v] = twist_node.at ? *twist_node.at : default_twist_edge(base);
    const Twist twist{u, v, {phi.images().begin(), phi.images().end()}};
    return build_bundle(std::move(base), std::move(fibre), std::span(&twist, 1));
  }
  // A plain graph is read as the trivial bundle with fibre K1.
  return build_bundle(evaluate_graph(node), complete_graph(1));
}

}  // namespace

Graph parse_graph_spec(std::string_view text) { return evaluate_graph(Parser(text).parse()); }

Bundle parse_bundle_spec(std::string_view text) { return evaluate_bundle(Parser(text).parse()); }

}  // namespace bundlefd::cli
