#include "evenfactor/graph6.hpp"

#include <fstream>
#include <istream>

#include "evenfactor/errors.hpp"

namespace evenfactor {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::size_t body_length(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

}  // namespace

Graph from_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    text = trim(text);
    if (text.empty()) throw Graph6Error("graph6: empty line");
    for (char ch : text) {
        const int c = static_cast<unsigned char>(ch);
        if (c < 63 || c > 126) throw Graph6Error("graph6: character " + std::to_string(c) + " outside 63..126");
    }
    const int size_byte = static_cast<unsigned char>(text[0]);
    if (size_byte == 126) {
        throw Graph6Error("graph6: multi-byte size header (n > " + std::to_string(kMaxGraph6Order) +
                          ") is not supported");
    }
    const int n = size_byte - kOffset;
    const std::string_view body = text.substr(1);
    if (body.size() != body_length(n)) {
        throw Graph6Error("graph6: expected " + std::to_string(body_length(n)) + " data bytes for n=" +
                          std::to_string(n) + ", got " + std::to_string(body.size()));
    }

    std::vector<VertexMask> masks(n, 0);
    std::size_t k = 0;
    auto bit_at = [&](std::size_t idx) {
        const int value = static_cast<unsigned char>(body[idx / 6]) - kOffset;
        return (value >> (5 - idx % 6)) & 1;
    };
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (bit_at(k)) {
                masks[i] |= VertexMask{1} << j;
                masks[j] |= VertexMask{1} << i;
            }
        }
    }
    for (; k < body.size() * 6; ++k) {
        if (bit_at(k)) throw Graph6Error("graph6: nonzero padding bits");
    }
    return Graph::from_masks(std::move(masks));
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxGraph6Order) {
        throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxGraph6Order));
    }
    std::string out(1 + body_length(n), static_cast<char>(kOffset));
    out[0] = static_cast<char>(n + kOffset);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (g.adjacent(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
        }
    }
    return out;
}

std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
    std::vector<Graph6Line> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view = line;
        if (view.starts_with(kHeader)) view.remove_prefix(kHeader.size());
        view = trim(view);
        if (!view.empty()) out.push_back({number, std::string(view)});
    }
    return out;
}

std::vector<Graph6Line> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file '" + path + "'");
    return read_graph6_lines(in);
}

}  // namespace evenfactor
