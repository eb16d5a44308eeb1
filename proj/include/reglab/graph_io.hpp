// graph6 codec and the plain edge-list file format.
//
// graph6: one graph per line. Header encodes n (single byte n+63 for
// n <= 62, '~' + three bytes for larger). Payload packs the upper triangle
// column by column, x(0,1), x(0,2), x(1,2), x(0,3), ..., six bits per byte,
// each byte offset by 63, zero padded.
//
// Edge list: first line "n m", then m lines "u v" with 0-based indices.

#ifndef REGLAB_GRAPH_IO_HPP
#define REGLAB_GRAPH_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "graph.hpp"

namespace reglab {

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

inline Graph parse_graph6(const std::string& line) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > line.size()) throw parse_error("graph6: truncated record");
    };
    auto decode_byte = [&](size_t at) -> int {
        unsigned char c = static_cast<unsigned char>(line[at]);
        if (c < 63 || c > 126) throw parse_error("graph6: character out of range");
        return c - 63;
    };

    need(1);
    long long n;
    if (line[pos] == '~') {
        ++pos;
        need(1);
        if (line[pos] == '~') throw parse_error("graph6: order too large for this tool");
        need(3);
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | decode_byte(pos + static_cast<size_t>(i));
        pos += 3;
        if (n < 63) throw parse_error("graph6: malformed long-form header");
    } else {
        n = decode_byte(pos);
        ++pos;
    }
    if (n > kMaxGround) throw parse_error("graph6: order exceeds supported maximum");

    long long bits = n * (n - 1) / 2;
    size_t payload = static_cast<size_t>((bits + 5) / 6);
    need(payload);
    if (pos + payload != line.size()) throw parse_error("graph6: trailing characters");

    Graph g(static_cast<int>(n));
    std::vector<std::pair<int, int>> edges;
    long long idx = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++idx) {
            int byte = decode_byte(pos + static_cast<size_t>(idx / 6));
            if ((byte >> (5 - idx % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string to_graph6(const Graph& g) {
    std::string out;
    int n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    int acc = 0, filled = 0;
    long long idx = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++idx) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (bits % 6 != 0) out.push_back(static_cast<char>((acc << (6 - bits % 6)) + 63));
    return out;
}

inline Graph read_edge_list(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw parse_error("edge list: missing header line");
    std::istringstream hs(header);
    int n, m;
    if (!(hs >> n >> m) || n < 0 || m < 0) throw parse_error("edge list: bad header line");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        std::string line;
        if (!std::getline(in, line))
            throw parse_error("edge list: expected " + std::to_string(m) + " edges, got " +
                              std::to_string(i));
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v))
            throw parse_error("edge list: bad edge on line " + std::to_string(i + 2));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge list: endpoint out of range on line " + std::to_string(i + 2));
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

}  // namespace reglab

#endif  // REGLAB_GRAPH_IO_HPP
