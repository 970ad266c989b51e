#include "bundlefd/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <iterator>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace bundlefd {

std::vector<TextLine> split_lines(std::string_view text) {
  std::vector<TextLine> lines;
  std::size_t number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, std::string(line)});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t begin = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({begin + 1, line.substr(begin, i - begin)});
  }
  return tokens;
}

long long parse_integer(const Token& token, std::size_t line) {
  long long value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0) {
    throw ParseError("expected a non-negative integer, got '" + token.text + "'", line, token.column);
  }
  return value;
}

namespace {

bool skippable(const std::string& text) {
  for (char c : text) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Graph parse_edge_list(std::span<const TextLine> lines) {
  long long order = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t last_line = 1;
  for (const TextLine& line : lines) {
    last_line = line.number;
    if (skippable(line.text)) continue;
    const auto tokens = tokenize(line.text);
    if (order < 0) {
      if (tokens.size() != 2 || tokens[0].text != "n") {
        throw ParseError("expected header 'n <count>'", line.number, tokens.front().column);
      }
      order = parse_integer(tokens[1], line.number);
      continue;
    }
    if (tokens.size() != 2) {
      const std::size_t col = tokens.size() > 2 ? tokens[2].column : tokens.front().column;
      throw ParseError("expected exactly two vertex ids", line.number, col);
    }
    const long long u = parse_integer(tokens[0], line.number);
    const long long v = parse_integer(tokens[1], line.number);
    if (u >= order) throw ParseError("vertex id out of range", line.number, tokens[0].column);
    if (v >= order) throw ParseError("vertex id out of range", line.number, tokens[1].column);
    if (u == v) throw ParseError("self-loop", line.number, tokens[0].column);
    const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) throw ParseError("duplicate edge", line.number, tokens[0].column);
    edges.push_back(e);
  }
  if (order < 0) throw ParseError("missing header 'n <count>'", last_line, 1);
  return Graph(static_cast<int>(order), std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  return parse_edge_list(std::span<const TextLine>(lines));
}

Graph read_edge_list(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_edge_list(std::string_view(text));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

}  // namespace bundlefd
