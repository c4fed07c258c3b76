#include "orecycle/graph6.hpp"

#include <array>
#include <istream>
#include <ostream>
#include <sstream>

#include "orecycle/errors.hpp"

namespace orecycle {

namespace {

constexpr int kBias = 63;

int data_bytes_for(int order) {
    const int bits = order * (order - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph graph6_decode(std::string_view s) {
    if (s.starts_with(kGraph6Header)) s.remove_prefix(kGraph6Header.size());
    if (s.empty()) throw Graph6Error(Graph6ErrorKind::empty_input, "graph6: empty input");
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) {
            throw Graph6Error(Graph6ErrorKind::bad_character,
                              "graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                                  " is outside 63..126");
        }
    }
    if (s[0] == '~') {
        throw Graph6Error(Graph6ErrorKind::extended_size, "graph6: extended size prefix (order > 62) not supported");
    }
    const int n = s[0] - kBias;
    const int expected = data_bytes_for(n);
    const int have = static_cast<int>(s.size()) - 1;
    if (have < expected) {
        throw Graph6Error(Graph6ErrorKind::truncated, "graph6: order " + std::to_string(n) + " needs " +
                                                          std::to_string(expected) + " data characters, got " +
                                                          std::to_string(have));
    }
    if (have > expected) {
        throw Graph6Error(Graph6ErrorKind::trailing_data, "graph6: " + std::to_string(have - expected) +
                                                              " unexpected trailing characters");
    }

    std::array<VertexSet, kMaxOrder> rows{};
    int bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            const int value = s[1 + bit / 6] - kBias;
            if ((value >> (5 - bit % 6)) & 1) {
                rows[i] |= singleton(j);
                rows[j] |= singleton(i);
            }
        }
    }
    if (bit % 6 != 0) {
        const int last = s[1 + bit / 6] - kBias;
        const int pad_mask = (1 << (6 - bit % 6)) - 1;
        if ((last & pad_mask) != 0) throw Graph6Error(Graph6ErrorKind::nonzero_padding, "graph6: nonzero padding bits");
    }
    return graph_from_adjacency(n, std::span<const VertexSet>(rows.data(), static_cast<std::size_t>(n)));
}

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) {
        throw Graph6Error(Graph6ErrorKind::order_too_large, "graph6: order " + std::to_string(n) + " exceeds 62");
    }
    std::string out(1 + data_bytes_for(n), static_cast<char>(kBias));
    out[0] = static_cast<char>(n + kBias);
    int bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
        }
    }
    return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(graph6_decode(line));
        } catch (const Graph6Error& e) {
            throw Graph6Error(e.kind(), "line " + std::to_string(number) + ": " + e.what());
        }
    }
    return out;
}

Graph read_edge_list(std::istream& in) {
    int n = 0;
    int m = 0;
    if (!(in >> n >> m)) throw PreconditionError("edge list: expected header \"n m\"");
    if (m < 0) throw PreconditionError("edge list: negative edge count");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        Edge e;
        if (!(in >> e.first >> e.second)) {
            throw PreconditionError("edge list: expected " + std::to_string(m) + " edges, read " + std::to_string(i));
        }
        edges.push_back(e);
    }
    return graph_from_edges(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace orecycle
