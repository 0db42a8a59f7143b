#pragma once

#include "turan/errors.hpp"
#include "turan/graph.hpp"

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace turan {

/// Malformed graph6 input. `offset` is the byte position within the
/// string passed to the decoder at which the problem was detected.
struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t offset_)
        : std::runtime_error(msg + " (byte " + std::to_string(offset_) + ")"), offset(offset_) {}
};

namespace detail {

constexpr int kGraph6Max1Byte = 62;
constexpr int kGraph6Max4Byte = 258047;

inline std::size_t graph6_data_length(long long n) {
    const long long bits = n * (n - 1) / 2;
    return static_cast<std::size_t>((bits + 5) / 6);
}

}  // namespace detail

/// Standard graph6 encoding of a labelled graph: header byte(s) n+63,
/// then the upper triangle in column-major order packed into 6-bit
/// groups offset by 63. Supports the 1-byte (n <= 62) and 4-byte
/// (n <= 258047) headers; anything larger is refused.
inline std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= detail::kGraph6Max1Byte) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= detail::kGraph6Max4Byte) {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        throw capacity_error("graph6_encode: order " + std::to_string(n) + " exceeds the 4-byte header form");
    }
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

/// Decode one graph6 string. An optional ">>graph6<<" prefix is
/// tolerated; the adjacency data must match the header's order exactly.
inline Graph graph6_decode(std::string_view text) {
    constexpr std::string_view kPrefix = ">>graph6<<";
    std::size_t base = 0;
    if (text.substr(0, kPrefix.size()) == kPrefix) {
        text.remove_prefix(kPrefix.size());
        base = kPrefix.size();
    }
    if (text.empty()) throw parse_error("graph6: empty input", base);

    std::size_t pos = 0;
    auto data_byte = [&](std::size_t at) -> int {
        const unsigned char c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of range", base + at);
        return c - 63;
    };

    long long n = 0;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw capacity_error("graph6_decode: 8-byte header (n > 258047) is not supported");
        if (text.size() < 4) throw parse_error("graph6: truncated 4-byte header", base + text.size());
        n = (static_cast<long long>(data_byte(1)) << 12) | (data_byte(2) << 6) | data_byte(3);
        if (n <= detail::kGraph6Max1Byte) throw parse_error("graph6: non-canonical long header", base);
        pos = 4;
    } else {
        n = data_byte(0);
        pos = 1;
    }

    const std::size_t expected = detail::graph6_data_length(n);
    if (text.size() - pos < expected) throw parse_error("graph6: truncated adjacency data", base + text.size());
    if (text.size() - pos > expected) throw parse_error("graph6: trailing bytes after adjacency data", base + pos + expected);

    Graph g(static_cast<int>(n));
    int v = 1, u = 0;
    for (std::size_t i = 0; i < expected; ++i) {
        const int group = data_byte(pos + i);
        for (int bit = 5; bit >= 0; --bit) {
            if (v >= n) break;  // zero padding in the final group
            if ((group >> bit) & 1) g.add_edge(u, v);
            if (++u == v) {
                ++v;
                u = 0;
            }
        }
    }
    return g;
}

/// Reads graph6 lines from a stream, one graph per line; blank lines are
/// skipped and trailing carriage returns stripped.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        graphs.push_back(graph6_decode(line));
    }
    return graphs;
}

inline void write_graph6_line(std::ostream& out, const Graph& g) { out << graph6_encode(g) << '\n'; }

}  // namespace turan
