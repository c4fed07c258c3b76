#pragma once

// Simple undirected graphs on at most 64 vertices, stored as one neighborhood
// bit mask per vertex, plus the cycle/path value types checked against them.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace orecycle {

using Vertex = int;
using VertexSet = std::uint64_t;  // bit v set <=> vertex v is a member

inline constexpr int kMaxOrder = 64;

constexpr VertexSet singleton(Vertex v) { return VertexSet{1} << v; }

constexpr VertexSet first_n(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int set_size(VertexSet s) { return std::popcount(s); }

constexpr bool contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }

// Iterate members in increasing label order.
template <class F>
constexpr void for_each_member(VertexSet s, F&& f) {
    while (s != 0) {
        f(static_cast<Vertex>(std::countr_zero(s)));
        s &= s - 1;
    }
}

std::vector<Vertex> members(VertexSet s);

using Edge = std::pair<Vertex, Vertex>;

class Graph {
public:
    // Edgeless graph of the given order (0..64).
    static Graph empty(int order);

    int order() const noexcept { return order_; }
    VertexSet vertices() const noexcept { return first_n(order_); }

    bool adjacent(Vertex u, Vertex v) const noexcept { return contains(adjacency_[u], v); }
    VertexSet neighbors(Vertex v) const noexcept { return adjacency_[v]; }
    int degree(Vertex v) const noexcept { return set_size(adjacency_[v]); }

    int edge_count() const noexcept;
    int min_degree() const noexcept;
    bool is_complete() const noexcept;
    std::vector<Edge> edges() const;

    // Copies with one edge added or removed. Both endpoints must be distinct
    // vertices of the graph.
    Graph with_edge(Vertex u, Vertex v) const;
    Graph without_edge(Vertex u, Vertex v) const;

    Graph induced(VertexSet keep) const;  // relabels survivors 0..k-1 in order
    Graph relabeled(std::span<const Vertex> new_label_of) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    explicit Graph(int order) : order_(order) {}

    void set_edge(Vertex u, Vertex v) noexcept {
        adjacency_[u] |= singleton(v);
        adjacency_[v] |= singleton(u);
    }
    void clear_edge(Vertex u, Vertex v) noexcept {
        adjacency_[u] &= ~singleton(v);
        adjacency_[v] &= ~singleton(u);
    }

    friend Graph graph_from_edges(int n, std::span<const Edge> edges);
    friend Graph graph_from_adjacency(int n, std::span<const VertexSet> rows);

    int order_ = 0;
    std::array<VertexSet, kMaxOrder> adjacency_{};
};

// Throws PreconditionError on n < 3, n > 64, an out-of-range endpoint or a
// loop. Duplicate pairs collapse.
Graph graph_from_edges(int n, std::span<const Edge> edges);
Graph graph_from_edges(int n, std::initializer_list<Edge> edges);

// Rows must be symmetric and irreflexive over the first n vertices; n may be
// 0..64 here so that the enumerator and codec can build small graphs.
Graph graph_from_adjacency(int n, std::span<const VertexSet> rows);

// A cycle given as its cyclic vertex order. Validity is relative to a graph.
struct Cycle {
    std::vector<Vertex> vertices;

    int length() const noexcept { return static_cast<int>(vertices.size()); }

    // Rotates to start at the minimum label and orients so that the second
    // entry is the smaller of the start's two cycle neighbors.
    Cycle canonical() const;

    // Edges (v_i, v_{i+1}) including the closing edge, each as (min, max).
    std::vector<Edge> edges() const;

    bool uses_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct Path {
    std::vector<Vertex> vertices;

    int length() const noexcept { return static_cast<int>(vertices.size()); }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }

    friend bool operator==(const Path&, const Path&) = default;
};

bool is_valid_cycle(const Graph& g, const Cycle& c);
bool is_hamilton_cycle(const Graph& g, const Cycle& c);
bool is_valid_path(const Graph& g, const Path& p);
bool is_hamilton_path(const Graph& g, const Path& p);

bool is_connected(const Graph& g);
bool is_connected_within(const Graph& g, VertexSet within);

// Cutvertices via depth-first lowpoints.
VertexSet cutvertices(const Graph& g);

// Connected, order >= 3, no cutvertex.
bool is_biconnected(const Graph& g);

// colors[v] in {0, 1}; absent when the graph has an odd cycle.
std::optional<std::vector<int>> is_bipartite(const Graph& g);

struct DegreeProfile {
    std::vector<int> degrees;  // ascending
    int min_degree = 0;
    int edge_count = 0;

    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

DegreeProfile degree_profile(const Graph& g);

}  // namespace orecycle
