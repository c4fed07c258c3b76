#include "orecycle/gallery.hpp"

#include <string>

#include "orecycle/cycles.hpp"
#include "orecycle/errors.hpp"
#include "orecycle/verify.hpp"

namespace orecycle {

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return graph_from_edges(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return graph_from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw PreconditionError("complete_bipartite needs both classes non-empty");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) edges.emplace_back(u, v);
    return graph_from_edges(a + b, edges);
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer pentagon
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return graph_from_edges(10, edges);
}

GalleryEntry remark_cutvertex_graph(int n) {
    if (n < 4) throw PreconditionError("remark_cutvertex_graph needs n >= 4");
    const int first = n / 2;
    const Vertex x0 = n - 1;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const bool same_clique = (u < first) == (v < first);
            if (same_clique || v == x0) edges.emplace_back(u, v);
        }
    }
    GalleryEntry e{"remark-cutvertex(" + std::to_string(n) + ")", graph_from_edges(n, edges), {}};
    e.claims.sigma2 = Sigma2::of(n - 1);
    e.claims.biconnected = false;
    e.claims.circumference = first + 1;
    return e;
}

GalleryEntry ore_sharpness_graph(int n, int k) {
    if (k < 0) throw PreconditionError("ore_sharpness_graph needs k >= 0");
    if ((n - k) % 2 == 0) throw PreconditionError("ore_sharpness_graph needs n-k odd");
    const int small = (n - k - 1) / 2;
    const int large = (n + k + 1) / 2;
    if (small < 2) throw PreconditionError("ore_sharpness_graph needs (n-k-1)/2 >= 2");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < small; ++u) {
        for (Vertex v = u + 1; v < small; ++v) edges.emplace_back(u, v);
        for (Vertex v = small; v < small + large; ++v) edges.emplace_back(u, v);
    }
    GalleryEntry e{"ore-sharpness(" + std::to_string(n) + "," + std::to_string(k) + ")",
                   graph_from_edges(n, edges), {}};
    e.claims.sigma2 = Sigma2::of(n - k - 1);
    e.claims.biconnected = true;
    e.claims.bipartite = false;
    e.claims.hamiltonian = false;
    e.claims.circumference = n - k - 1;
    return e;
}

GalleryEntry bipartite_tight_graph(int m) {
    if (m < 2) throw PreconditionError("bipartite_tight_graph needs m >= 2");
    const int n = 2 * m + 1;
    GalleryEntry e{"bipartite-tight(" + std::to_string(m) + ")", complete_bipartite(m, m + 1), {}};
    e.claims.sigma2 = Sigma2::of(n - 1);
    e.claims.biconnected = true;
    e.claims.bipartite = true;
    e.claims.hamiltonian = false;
    e.claims.circumference = n - 1;
    e.claims.closure_min_degree = (n - 1) / 2;
    e.claims.closure_maximal_nonhamiltonian = true;
    return e;
}

namespace {

std::string show(const Sigma2& s) { return s.is_complete() ? "complete" : std::to_string(s.value()); }
std::string show(bool b) { return b ? "true" : "false"; }
std::string show(int v) { return std::to_string(v); }

template <class T>
void compare(std::vector<ClaimCheck>& out, const char* property, const std::optional<T>& claim, const T& actual) {
    if (!claim) return;
    out.push_back({property, show(*claim), show(actual), *claim == actual});
}

}  // namespace

std::vector<ClaimCheck> check_claims(const GalleryEntry& entry) {
    const Graph& g = entry.graph;
    const Claims& c = entry.claims;
    std::vector<ClaimCheck> out;
    if (c.sigma2) compare(out, "sigma2", c.sigma2, sigma2_nonadjacent(g));
    if (c.biconnected) compare(out, "biconnected", c.biconnected, is_biconnected(g));
    if (c.bipartite) compare(out, "bipartite", c.bipartite, is_bipartite(g).has_value());
    if (c.hamiltonian) compare(out, "hamiltonian", c.hamiltonian, find_hamiltonian_cycle(g).has_value());
    if (c.circumference) {
        const auto circ = circumference(g);
        compare(out, "circumference", c.circumference, circ ? circ->length : 0);
    }
    if (c.closure_min_degree || c.closure_maximal_nonhamiltonian) {
        const Graph closure = n_closure(g);
        compare(out, "closure_min_degree", c.closure_min_degree, closure.min_degree());
        if (c.closure_maximal_nonhamiltonian) {
            const bool maximal = !closure.is_complete() && is_maximal_nonhamiltonian(closure);
            compare(out, "closure_maximal_nonhamiltonian", c.closure_maximal_nonhamiltonian, maximal);
        }
    }
    return out;
}

namespace {

void need(const std::vector<int>& params, std::size_t count, const std::string& name) {
    if (params.size() != count) {
        throw PreconditionError("gallery " + name + " takes " + std::to_string(count) + " parameter(s)");
    }
}

}  // namespace

GalleryEntry gallery_entry(const std::string& name, const std::vector<int>& params) {
    if (name == "cycle") {
        need(params, 1, name);
        Graph g = cycle_graph(params[0]);
        return {"cycle(" + std::to_string(params[0]) + ")", g, {}};
    }
    if (name == "complete") {
        need(params, 1, name);
        return {"complete(" + std::to_string(params[0]) + ")", complete_graph(params[0]), {}};
    }
    if (name == "complete-bipartite") {
        need(params, 2, name);
        return {"complete-bipartite(" + std::to_string(params[0]) + "," + std::to_string(params[1]) + ")",
                complete_bipartite(params[0], params[1]),
                {}};
    }
    if (name == "petersen") {
        need(params, 0, name);
        return {"petersen", petersen_graph(), {}};
    }
    if (name == "remark-cutvertex") {
        need(params, 1, name);
        return remark_cutvertex_graph(params[0]);
    }
    if (name == "ore-sharpness") {
        need(params, 2, name);
        return ore_sharpness_graph(params[0], params[1]);
    }
    if (name == "bipartite-tight") {
        need(params, 1, name);
        return bipartite_tight_graph(params[0]);
    }
    throw PreconditionError("unknown gallery graph \"" + name + "\"");
}

std::vector<std::string> gallery_names() {
    return {"cycle", "complete", "complete-bipartite", "petersen", "remark-cutvertex", "ore-sharpness",
            "bipartite-tight"};
}

}  // namespace orecycle
