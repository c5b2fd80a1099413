#include "eskit/formats.hpp"

#include <sstream>

namespace eskit {

// graph6 packs the upper triangle of the adjacency matrix column by column:
// (0,1), (0,2), (1,2), (0,3), ..., six bits per printable byte, each byte
// offset by 63.  See the formats section of the nauty manual.

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    unsigned first = static_cast<unsigned char>(text[0]);
    if (first == 126) throw ParseError("multi-byte graph6 orders are not supported", 0);
    if (first < 63 || first > 126)
        throw ParseError("graph6 byte out of range [63,126]", 0);
    const int n = static_cast<int>(first) - 63;
    if (n < 1) throw ParseError("graphs need at least one vertex", 0);

    const int bits = n * (n - 1) / 2;
    const std::size_t want = 1 + (bits + 5) / 6;
    if (text.size() < want) throw ParseError("graph6 string truncated", text.size());
    if (text.size() > want) throw ParseError("trailing bytes after graph6 data", want);

    EdgeSet edges;
    int bit = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        unsigned byte = static_cast<unsigned char>(text[i]);
        if (byte < 63 || byte > 126) throw ParseError("graph6 byte out of range [63,126]", i);
        unsigned group = byte - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = (group >> b & 1u) != 0;
            if (bit >= bits) {
                if (set) throw ParseError("non-zero padding bits", i);
                continue;
            }
            if (!set) continue;
            // Recover (row, col) for this position of the column-major
            // upper triangle.
            int col = 1;
            int rem = bit;
            while (rem >= col) {
                rem -= col;
                ++col;
            }
            edges.push_back({rem, col});
        }
    }
    return Graph(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out(1, static_cast<char>(n + 63));
    unsigned group = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = group << 1 | (g.has_edge(row, col) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    int n = -1;
    EdgeSet edges;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError("missing vertex count line", 1);
    {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> n) || (ls >> extra))
            throw ParseError("expected a single integer vertex count", lineno);
        if (n < 1 || n > kMaxVertices)
            throw ParseError("vertex count must be between 1 and 62", lineno);
    }
    while (next_line()) {
        std::istringstream ls(line);
        int u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw ParseError("expected two integers 'u v'", lineno);
        if (u == v) throw ParseError("loop edge " + std::to_string(u), lineno);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("vertex index out of range on edge " + std::to_string(u) + " " +
                             std::to_string(v), lineno);
        edges.push_back(make_edge(u, v));
    }
    return Graph(n, std::move(edges));
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace eskit
