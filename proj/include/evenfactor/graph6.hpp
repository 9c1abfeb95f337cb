#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "evenfactor/graph.hpp"

namespace evenfactor {

// graph6 support is limited to the single size byte form (n <= 62).
inline constexpr int kMaxGraph6Order = 62;

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

struct Graph6Line {
    std::size_t line_number = 0;  // 1-based position in the source
    std::string text;
};

// Newline-separated graph6 lines. A leading ">>graph6<<" header is stripped,
// surrounding whitespace trimmed, blank lines skipped. Lines are not decoded.
std::vector<Graph6Line> read_graph6_lines(std::istream& in);
std::vector<Graph6Line> read_graph6_file(const std::string& path);

}  // namespace evenfactor
