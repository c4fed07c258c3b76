#pragma once

// Named graphs and the sharpness constructions, each carrying the property
// values it is claimed to have so that tests can re-derive them.

#include <optional>
#include <string>
#include <vector>

#include "orecycle/closure.hpp"
#include "orecycle/graph.hpp"

namespace orecycle {

Graph cycle_graph(int n);
Graph complete_graph(int n);
// Classes {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

struct Claims {
    std::optional<Sigma2> sigma2;
    std::optional<bool> biconnected;
    std::optional<bool> bipartite;
    std::optional<bool> hamiltonian;
    std::optional<int> circumference;
    std::optional<int> closure_min_degree;
    std::optional<bool> closure_maximal_nonhamiltonian;
};

struct GalleryEntry {
    std::string name;
    Graph graph;
    Claims claims;
};

// Cliques K_floor(n/2) on 0.. and K_ceil(n/2) on the rest; the last vertex x0
// is joined to all of the first clique. n >= 4.
GalleryEntry remark_cutvertex_graph(int n);

// K_{(n-k-1)/2, (n+k+1)/2} with the smaller class completed to a clique
// (placed first). Needs n-k odd, k >= 0, (n-k-1)/2 >= 2.
GalleryEntry ore_sharpness_graph(int n, int k);

// K_{m, m+1}, m >= 2.
GalleryEntry bipartite_tight_graph(int m);

struct ClaimCheck {
    std::string property;
    std::string expected;
    std::string actual;
    bool ok = false;
};

// Re-derives every populated claim with the exact engine.
std::vector<ClaimCheck> check_claims(const GalleryEntry& entry);

// Lookup used by the CLI: cycle, complete, complete-bipartite, petersen,
// remark-cutvertex, ore-sharpness, bipartite-tight.
GalleryEntry gallery_entry(const std::string& name, const std::vector<int>& params);
std::vector<std::string> gallery_names();

}  // namespace orecycle
