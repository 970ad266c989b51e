#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bundlefd/graph.hpp"

namespace bundlefd {

/// One line of text input with its 1-based line number in the source.
struct TextLine {
  std::size_t number = 0;
  std::string text;
};

std::vector<TextLine> split_lines(std::string_view text);

/// Whitespace-separated token with its 1-based column.
struct Token {
  std::size_t column = 0;
  std::string text;
};

std::vector<Token> tokenize(const std::string& line);

/// Parses a non-negative integer token, reporting the token's position on failure.
long long parse_integer(const Token& token, std::size_t line);

/// Edge-list format: a header "n <count>" followed by one "u v" pair per
/// line, 0-indexed. Blank lines and lines starting with '#' are skipped.
/// Self-loops and duplicate edges are rejected with a ParseError.
Graph parse_edge_list(std::span<const TextLine> lines);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(std::istream& in);

void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace bundlefd
