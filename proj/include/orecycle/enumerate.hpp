#pragma once

// Isomorph-free generation of all graphs of small order.

#include <cstdint>
#include <functional>
#include <vector>

#include "orecycle/graph.hpp"

namespace orecycle {

inline constexpr int kCanonicalMaxOrder = 10;
inline constexpr int kEnumerateMaxOrder = 8;

struct CanonicalForm {
    int order = 0;
    // Upper-triangle bits in graph6 column order, first bit most significant,
    // minimised over all relabelings that list vertices by ascending degree.
    std::uint64_t bits = 0;
    std::uint64_t automorphisms = 0;
    std::vector<Vertex> labeling;  // labeling[position] = original vertex

    bool same_class(const CanonicalForm& other) const { return order == other.order && bits == other.bits; }
};

// Requires order <= 10.
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

struct GraphClass {
    Graph graph;  // representative, in the labeling it was first generated with
    CanonicalForm form;
};

// One representative per isomorphism class of order n (3 <= n <= 8), grown by
// adding a vertex with every possible neighborhood to each class of order n-1.
// Output order is deterministic. Results are cached per order.
const std::vector<GraphClass>& enumerate_classes(int n);

std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter = {});

}  // namespace orecycle
