#include "orecycle/graph.hpp"

#include <algorithm>
#include <string>

#include "orecycle/errors.hpp"

namespace orecycle {

std::vector<Vertex> members(VertexSet s) {
    std::vector<Vertex> out;
    out.reserve(set_size(s));
    for_each_member(s, [&](Vertex v) { out.push_back(v); });
    return out;
}

Graph Graph::empty(int order) {
    if (order < 0 || order > kMaxOrder) {
        throw PreconditionError("graph order must be in [0, 64], got " + std::to_string(order));
    }
    return Graph(order);
}

int Graph::edge_count() const noexcept {
    int twice = 0;
    for (Vertex v = 0; v < order_; ++v) twice += degree(v);
    return twice / 2;
}

int Graph::min_degree() const noexcept {
    int best = order_ == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < order_; ++v) best = std::min(best, degree(v));
    return best;
}

bool Graph::is_complete() const noexcept {
    for (Vertex v = 0; v < order_; ++v) {
        if (adjacency_[v] != (vertices() & ~singleton(v))) return false;
    }
    return true;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order_; ++u) {
        for_each_member(adjacency_[u] & ~first_n(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
    }
    return out;
}

namespace {

void check_pair(int order, Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
        throw PreconditionError("vertex out of range in edge (" + std::to_string(u) + ", " +
                                std::to_string(v) + ") for order " + std::to_string(order));
    }
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
}

}  // namespace

Graph Graph::with_edge(Vertex u, Vertex v) const {
    check_pair(order_, u, v);
    Graph g = *this;
    g.set_edge(u, v);
    return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
    check_pair(order_, u, v);
    Graph g = *this;
    g.clear_edge(u, v);
    return g;
}

Graph Graph::induced(VertexSet keep) const {
    keep &= vertices();
    std::array<Vertex, kMaxOrder> label{};
    int next = 0;
    for_each_member(keep, [&](Vertex v) { label[v] = next++; });
    Graph g(next);
    for_each_member(keep, [&](Vertex u) {
        for_each_member(adjacency_[u] & keep, [&](Vertex v) { g.adjacency_[label[u]] |= singleton(label[v]); });
    });
    return g;
}

Graph Graph::relabeled(std::span<const Vertex> new_label_of) const {
    if (static_cast<int>(new_label_of.size()) != order_) {
        throw PreconditionError("relabeling must list one label per vertex");
    }
    VertexSet seen = 0;
    for (Vertex v : new_label_of) {
        if (v < 0 || v >= order_ || contains(seen, v)) throw PreconditionError("relabeling is not a permutation");
        seen |= singleton(v);
    }
    Graph g(order_);
    for (Vertex u = 0; u < order_; ++u) {
        for_each_member(adjacency_[u], [&](Vertex v) { g.adjacency_[new_label_of[u]] |= singleton(new_label_of[v]); });
    }
    return g;
}

Graph graph_from_edges(int n, std::span<const Edge> edges) {
    if (n < 3) throw PreconditionError("graph order must be at least 3, got " + std::to_string(n));
    if (n > kMaxOrder) throw PreconditionError("graph order must be at most 64, got " + std::to_string(n));
    Graph g(n);
    for (auto [u, v] : edges) {
        check_pair(n, u, v);
        g.set_edge(u, v);
    }
    return g;
}

Graph graph_from_edges(int n, std::initializer_list<Edge> edges) {
    return graph_from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph graph_from_adjacency(int n, std::span<const VertexSet> rows) {
    Graph g = Graph::empty(n);
    if (static_cast<int>(rows.size()) != n) throw PreconditionError("adjacency must have one row per vertex");
    for (Vertex v = 0; v < n; ++v) {
        VertexSet row = rows[v];
        if ((row & ~g.vertices()) != 0 || contains(row, v)) {
            throw PreconditionError("adjacency row " + std::to_string(v) + " is out of range or has a loop");
        }
        for_each_member(row, [&](Vertex u) {
            if (!contains(rows[u], v)) throw PreconditionError("adjacency is not symmetric");
        });
        g.adjacency_[v] = row;
    }
    return g;
}

Cycle Cycle::canonical() const {
    if (vertices.empty()) return *this;
    const auto n = vertices.size();
    const auto start = static_cast<std::size_t>(
        std::distance(vertices.begin(), std::min_element(vertices.begin(), vertices.end())));
    const Vertex forward = vertices[(start + 1) % n];
    const Vertex backward = vertices[(start + n - 1) % n];
    Cycle out;
    out.vertices.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t at = forward <= backward ? (start + i) % n : (start + n - i) % n;
        out.vertices.push_back(vertices[at]);
    }
    return out;
}

std::vector<Edge> Cycle::edges() const {
    std::vector<Edge> out;
    const auto n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vertex a = vertices[i];
        Vertex b = vertices[(i + 1) % n];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    return out;
}

bool Cycle::uses_edge(Vertex u, Vertex v) const {
    const auto n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vertex a = vertices[i];
        Vertex b = vertices[(i + 1) % n];
        if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
}

namespace {

// Distinct in-range labels, consecutive pairs adjacent.
bool is_simple_walk(const Graph& g, const std::vector<Vertex>& vs) {
    VertexSet seen = 0;
    for (Vertex v : vs) {
        if (v < 0 || v >= g.order() || contains(seen, v)) return false;
        seen |= singleton(v);
    }
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        if (!g.adjacent(vs[i], vs[i + 1])) return false;
    }
    return true;
}

}  // namespace

bool is_valid_cycle(const Graph& g, const Cycle& c) {
    return c.length() >= 3 && is_simple_walk(g, c.vertices) && g.adjacent(c.vertices.back(), c.vertices.front());
}

bool is_hamilton_cycle(const Graph& g, const Cycle& c) {
    return c.length() == g.order() && is_valid_cycle(g, c);
}

bool is_valid_path(const Graph& g, const Path& p) {
    return p.length() >= 2 && is_simple_walk(g, p.vertices);
}

bool is_hamilton_path(const Graph& g, const Path& p) {
    return p.length() == g.order() && is_valid_path(g, p);
}

bool is_connected_within(const Graph& g, VertexSet within) {
    within &= g.vertices();
    if (within == 0) return true;
    VertexSet reached = within & (~within + 1);
    VertexSet frontier = reached;
    while (frontier != 0) {
        VertexSet next = 0;
        for_each_member(frontier, [&](Vertex v) { next |= g.neighbors(v); });
        frontier = next & within & ~reached;
        reached |= frontier;
    }
    return reached == within;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.vertices()); }

namespace {

struct LowpointSearch {
    const Graph& g;
    std::array<int, kMaxOrder> discovered{};
    std::array<int, kMaxOrder> low{};
    int clock = 0;
    VertexSet cut = 0;

    void visit(Vertex v, Vertex parent) {
        discovered[v] = low[v] = ++clock;
        int children = 0;
        for_each_member(g.neighbors(v), [&](Vertex w) {
            if (discovered[w] == 0) {
                ++children;
                visit(w, v);
                low[v] = std::min(low[v], low[w]);
                if (parent >= 0 && low[w] >= discovered[v]) cut |= singleton(v);
            } else if (w != parent) {
                low[v] = std::min(low[v], discovered[w]);
            }
        });
        if (parent < 0 && children > 1) cut |= singleton(v);
    }
};

}  // namespace

VertexSet cutvertices(const Graph& g) {
    LowpointSearch search{g};
    for (Vertex v = 0; v < g.order(); ++v) {
        if (search.discovered[v] == 0) search.visit(v, -1);
    }
    return search.cut;
}

bool is_biconnected(const Graph& g) {
    return g.order() >= 3 && is_connected(g) && cutvertices(g) == 0;
}

std::optional<std::vector<int>> is_bipartite(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::vector<Vertex> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            bool clash = false;
            for_each_member(g.neighbors(v), [&](Vertex w) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    clash = true;
                }
            });
            if (clash) return std::nullopt;
        }
    }
    return color;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degrees.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
    std::sort(p.degrees.begin(), p.degrees.end());
    p.min_degree = p.degrees.empty() ? 0 : p.degrees.front();
    int sum = 0;
    for (int d : p.degrees) sum += d;
    p.edge_count = sum / 2;
    return p;
}

}  // namespace orecycle
