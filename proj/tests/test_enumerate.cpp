#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "orecycle/enumerate.hpp"
#include "orecycle/errors.hpp"
#include "orecycle/gallery.hpp"
#include "orecycle/graph6.hpp"
#include "support.hpp"

using namespace orecycle;
using namespace orecycle::testing;

namespace {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// Brute-force automorphism count over every permutation.
std::uint64_t oracle_automorphisms(const Graph& g) {
    std::vector<Vertex> perm(g.order());
    for (Vertex v = 0; v < g.order(); ++v) perm[v] = v;
    std::uint64_t count = 0;
    do {
        if (g.relabeled(perm) == g) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

TEST_CASE("class counts") {
    const std::map<int, std::size_t> expected{{3, 4}, {4, 11}, {5, 34}, {6, 156}, {7, 1044}, {8, 12346}};
    for (const auto& [n, count] : expected) CHECK(enumerate_classes(n).size() == count);
}

TEST_CASE("orbit-counting identity") {
    for (int n = 3; n <= 7; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        std::uint64_t sum = 0;
        for (const GraphClass& c : enumerate_classes(n)) {
            REQUIRE(factorial(n) % c.form.automorphisms == 0);
            sum += factorial(n) / c.form.automorphisms;
        }
        CHECK(sum == total);
    }
}

TEST_CASE("representatives are pairwise non-isomorphic and match their forms") {
    for (int n = 3; n <= 8; ++n) {
        std::set<std::uint64_t> seen;
        for (const GraphClass& c : enumerate_classes(n)) {
            REQUIRE(c.graph.order() == n);
            REQUIRE(seen.insert(c.form.bits).second);
            REQUIRE(canonical_form(c.graph).bits == c.form.bits);
        }
    }
}

TEST_CASE("automorphism counts") {
    CHECK(canonical_form(cycle_graph(5)).automorphisms == 10);
    CHECK(canonical_form(complete_graph(4)).automorphisms == 24);
    CHECK(canonical_form(graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}})).automorphisms == 2);
    CHECK(canonical_form(petersen_graph()).automorphisms == 120);
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(rng, 3 + trial % 5, 0.5);
        REQUIRE(canonical_form(g).automorphisms == oracle_automorphisms(g));
    }
}

TEST_CASE("canonical form is relabeling invariant") {
    Rng rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 3 + trial % 8;
        const Graph g = random_graph(rng, n, 0.2 + 0.1 * (trial % 7));
        const Graph h = g.relabeled(random_permutation(rng, n));
        const CanonicalForm a = canonical_form(g);
        const CanonicalForm b = canonical_form(h);
        REQUIRE(a.same_class(b));
        REQUIRE(a.automorphisms == b.automorphisms);
        REQUIRE(canonical_graph(g) == canonical_graph(h));
        REQUIRE(canonical_form(canonical_graph(g)).bits == a.bits);
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    // C6 and two disjoint triangles share a degree sequence.
    const Graph c6 = cycle_graph(6);
    const Graph triangles = graph_from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(canonical_form(c6).same_class(canonical_form(triangles)));
}

TEST_CASE("enumeration is deterministic and filterable") {
    std::vector<std::string> first;
    for (const Graph& g : enumerate_graphs(6)) first.push_back(graph6_encode(g));
    std::vector<std::string> again;
    for (const GraphClass& c : enumerate_classes(6)) again.push_back(graph6_encode(c.graph));
    CHECK(first == again);
    const auto connected = enumerate_graphs(6, [](const Graph& g) { return is_connected(g); });
    CHECK(connected.size() == 112);
    CHECK(enumerate_graphs(7, [](const Graph& g) { return is_biconnected(g); }).size() == 468);
}

TEST_CASE("order ranges") {
    CHECK_THROWS_AS(enumerate_classes(2), PreconditionError);
    CHECK_THROWS_AS(enumerate_classes(9), PreconditionError);
    CHECK_THROWS_AS(canonical_form(cycle_graph(11)), PreconditionError);
    CHECK_NOTHROW(canonical_form(cycle_graph(10)));
}
