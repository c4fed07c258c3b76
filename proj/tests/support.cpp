#include "support.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace orecycle::testing {

Graph random_graph(Rng& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return graph_from_edges(n, edges);
}

std::vector<Vertex> random_permutation(Rng& rng, int n) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

namespace {

bool connected_without(const Graph& g, int removed) {
    const int n = g.order();
    std::vector<bool> seen(n, false);
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (v != removed) {
            start = v;
            break;
        }
    if (start < 0) return true;
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
            if (w != removed && !seen[w] && g.adjacent(v, w)) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (v != removed && !seen[v]) return false;
    return true;
}

}  // namespace

bool oracle_biconnected(const Graph& g) {
    if (g.order() < 3 || !connected_without(g, -1)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (!connected_without(g, v)) return false;
    return true;
}

bool oracle_has_odd_closed_walk(const Graph& g) {
    const int n = g.order();
    for (int s = 0; s < n; ++s) {
        std::vector<std::array<bool, 2>> seen(n, {false, false});
        std::vector<std::pair<int, int>> stack{{s, 0}};
        seen[s][0] = true;
        while (!stack.empty()) {
            auto [v, parity] = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (!g.adjacent(v, w) || seen[w][1 - parity]) continue;
                seen[w][1 - parity] = true;
                stack.push_back({w, 1 - parity});
            }
        }
        if (seen[s][1]) return true;
    }
    return false;
}

std::set<int> oracle_cycle_lengths(const Graph& g) {
    const int n = g.order();
    std::set<int> lengths;
    std::vector<bool> on(n, false);
    std::function<void(int, int, int)> walk = [&](int start, int v, int len) {
        for (int w = 0; w < n; ++w) {
            if (!g.adjacent(v, w)) continue;
            if (w == start && len >= 3) lengths.insert(len);
            if (w <= start || on[w]) continue;
            on[w] = true;
            walk(start, w, len + 1);
            on[w] = false;
        }
    };
    for (int s = 0; s < n; ++s) {
        on[s] = true;
        walk(s, s, 1);
        on[s] = false;
    }
    return lengths;
}

bool oracle_hamiltonian(const Graph& g) {
    const int n = g.order();
    if (n < 3) return false;
    std::vector<int> order(n - 1);
    std::iota(order.begin(), order.end(), 1);
    do {
        bool ok = g.adjacent(0, order.front()) && g.adjacent(order.back(), 0);
        for (int i = 0; ok && i + 1 < n - 1; ++i) ok = g.adjacent(order[i], order[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

int oracle_sigma2(const Graph& g) {
    int best = -1;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) {
                int s = g.degree(u) + g.degree(v);
                if (best < 0 || s < best) best = s;
            }
    return best;
}

Graph oracle_closure_random_order(const Graph& g, Rng& rng) {
    Graph h = g;
    const int n = g.order();
    while (true) {
        std::vector<Edge> admissible;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!h.adjacent(u, v) && h.degree(u) + h.degree(v) >= n) admissible.emplace_back(u, v);
        if (admissible.empty()) return h;
        std::uniform_int_distribution<std::size_t> pick(0, admissible.size() - 1);
        const Edge e = admissible[pick(rng)];
        h = h.with_edge(e.first, e.second);
    }
}

bool oracle_hamilton_path(const Graph& g, Vertex x, Vertex y) {
    std::vector<int> inner;
    for (int v = 0; v < g.order(); ++v)
        if (v != x && v != y) inner.push_back(v);
    do {
        int prev = x;
        bool ok = true;
        for (int v : inner) {
            ok = ok && g.adjacent(prev, v);
            prev = v;
        }
        if (ok && g.adjacent(prev, y)) return true;
    } while (std::next_permutation(inner.begin(), inner.end()));
    return false;
}

}  // namespace orecycle::testing
