#pragma once

// Random generators and brute-force oracles shared by the test suites. The
// oracles deliberately avoid the library's search routines.

#include <random>
#include <set>
#include <vector>

#include "orecycle/graph.hpp"

namespace orecycle::testing {

using Rng = std::mt19937_64;

Graph random_graph(Rng& rng, int n, double p);
std::vector<Vertex> random_permutation(Rng& rng, int n);

// Rejection sampling: a random graph of order in [lo, hi] accepted by pred.
template <class Pred>
Graph random_graph_where(Rng& rng, int lo, int hi, double p_lo, double p_hi, Pred&& pred) {
    std::uniform_int_distribution<int> order(lo, hi);
    std::uniform_real_distribution<double> density(p_lo, p_hi);
    while (true) {
        Graph g = random_graph(rng, order(rng), density(rng));
        if (pred(g)) return g;
    }
}

// Connected and stays connected after deleting any single vertex.
bool oracle_biconnected(const Graph& g);
// Some vertex has a closed walk of odd length (parity-doubled reachability).
bool oracle_has_odd_closed_walk(const Graph& g);
// Every cycle length, by enumerating all simple paths.
std::set<int> oracle_cycle_lengths(const Graph& g);
// Hamiltonicity by trying every vertex order with vertex 0 first.
bool oracle_hamiltonian(const Graph& g);
// Minimum degree sum over non-adjacent pairs; -1 for complete graphs.
int oracle_sigma2(const Graph& g);
// n-closure joining admissible pairs in random order.
Graph oracle_closure_random_order(const Graph& g, Rng& rng);
// Hamilton x-y path by trying every order of the interior vertices.
bool oracle_hamilton_path(const Graph& g, Vertex x, Vertex y);

}  // namespace orecycle::testing
