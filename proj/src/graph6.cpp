#include "planardist/graph6.hpp"

#include <cstdint>
#include <stdexcept>

namespace planardist {

namespace {

constexpr char kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    }
}

int sextet(char c, std::size_t pos) {
    int v = static_cast<unsigned char>(c) - kOffset;
    if (v < 0 || v > 63)
        throw std::invalid_argument("graph6: byte " + std::to_string(pos) + " outside printable range");
    return v;
}

}  // namespace

std::string graph6_size_field(int n) {
    std::string out;
    append_size(out, static_cast<std::uint64_t>(n));
    return out;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    append_size(out, static_cast<std::uint64_t>(n));
    int acc = 0;
    int bits = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kOffset));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("graph6: empty string");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (text[0] != '~') {
        n = static_cast<std::uint64_t>(sextet(text[0], 0));
        pos = 1;
    } else if (text.size() >= 2 && text[1] == '~') {
        if (text.size() < 8) throw std::invalid_argument("graph6: truncated 8-byte size field");
        for (pos = 2; pos < 8; ++pos) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[pos], pos));
    } else {
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated 4-byte size field");
        for (pos = 1; pos < 4; ++pos) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[pos], pos));
    }
    if (n > 100000) throw std::invalid_argument("graph6: order " + std::to_string(n) + " too large");

    const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t expected = (pairs + 5) / 6;
    if (text.size() - pos != expected)
        throw std::invalid_argument("graph6: expected " + std::to_string(expected) + " data bytes for n=" +
                                    std::to_string(n) + ", got " + std::to_string(text.size() - pos));

    std::vector<Edge> edges;
    std::uint64_t bit = 0;
    const int order = static_cast<int>(n);
    for (Vertex j = 1; j < order; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            std::size_t byte = pos + bit / 6;
            int value = sextet(text[byte], byte);
            if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    for (; bit < expected * 6; ++bit) {
        std::size_t byte = pos + bit / 6;
        if ((sextet(text[byte], byte) >> (5 - bit % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return Graph::from_edges(order, edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(from_graph6(line));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace planardist
