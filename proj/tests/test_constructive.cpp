#include <doctest.h>

#include <algorithm>
#include <array>

#include "orecycle/closure.hpp"
#include "orecycle/cycles.hpp"
#include "orecycle/enumerate.hpp"
#include "orecycle/errors.hpp"
#include "orecycle/gallery.hpp"
#include "support.hpp"

using namespace orecycle;
using namespace orecycle::testing;

namespace {

Path path_of(std::vector<Vertex> vs) { return Path{std::move(vs)}; }

Graph two_triangles() { return graph_from_edges(5, {{0, 1}, {0, 4}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

// A random Hamilton path of g with non-adjacent endpoints, if one turns up.
std::optional<Path> random_open_hamilton_path(const Graph& g, Rng& rng) {
    const int n = g.order();
    for (int attempt = 0; attempt < 20; ++attempt) {
        const auto perm = random_permutation(rng, n);
        const Vertex x = perm[0];
        const Vertex y = perm[1];
        if (g.adjacent(x, y)) continue;
        if (auto p = find_hamilton_path_between(g, x, y)) return p;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("index sets on a small path") {
    const Graph g = complete_graph(4).without_edge(0, 3);
    const HamiltonPath p(g, path_of({0, 1, 2, 3}));
    CHECK(p.first_neighbor_indices() == std::vector<int>{1, 2});
    CHECK(p.last_neighbor_indices() == std::vector<int>{2, 3});
    CHECK(p.successors() == std::vector<Vertex>{2, 3});
    CHECK(p.last_degree() == 2);
    CHECK(p.smallest_crossing_index() == 2);
    CHECK(p.at(1) == 0);
    CHECK(p.at(4) == 3);
    CHECK(crossing_chord_cycle(g, p) == Cycle{{0, 2, 3, 1}}.canonical());
    CHECK_THROWS_AS(HamiltonPath(g, path_of({0, 3, 1, 2})), PreconditionError);
    CHECK_THROWS_AS(HamiltonPath(g, path_of({0, 1, 2})), PreconditionError);
}

TEST_CASE("crossing chord preconditions") {
    const Graph k5 = complete_graph(5).without_edge(0, 4);
    const Cycle c = crossing_chord_cycle(k5, HamiltonPath(k5, path_of({0, 1, 2, 3, 4})));
    CHECK(is_hamilton_cycle(k5, c));
    const Graph c5 = cycle_graph(5);
    CHECK_THROWS_AS(crossing_chord_cycle(c5, HamiltonPath(c5, path_of({0, 1, 2, 3, 4}))), PreconditionError);
    const Graph p5 = c5.without_edge(0, 4);
    CHECK_THROWS_AS(crossing_chord_cycle(p5, HamiltonPath(p5, path_of({0, 1, 2, 3, 4}))), PreconditionError);
}

TEST_CASE("pigeonhole: degree sum >= n forces a shared index") {
    Rng rng(31);
    int tried = 0;
    for (int trial = 0; trial < 3000 && tried < 400; ++trial) {
        const int n = 4 + trial % 10;
        const Graph g = random_graph(rng, n, 0.55);
        const auto path = random_open_hamilton_path(g, rng);
        if (!path) continue;
        const HamiltonPath p(g, *path);
        REQUIRE(static_cast<int>(p.first_neighbor_indices().size()) == g.degree(p.first()));
        REQUIRE(p.last_degree() == g.degree(p.last()));
        REQUIRE(p.successors().back() == p.last());
        if (g.degree(p.first()) + g.degree(p.last()) < n) continue;
        ++tried;
        REQUIRE(p.smallest_crossing_index().has_value());
        const Cycle c = crossing_chord_cycle(g, p);
        REQUIRE(is_hamilton_cycle(g, c));
    }
    CHECK(tried > 100);
}

TEST_CASE("unwinding closure cycles") {
    const ClosureTrace c4 = n_closure_with_trace(cycle_graph(4));
    CHECK(unwind_closure_cycle(c4, Cycle{{0, 1, 2, 3}}) == Cycle{{0, 1, 2, 3}});
    const Cycle rerouted = unwind_closure_cycle(c4, Cycle{{0, 2, 1, 3}});
    CHECK(is_hamilton_cycle(cycle_graph(4), rerouted));

    const ClosureTrace k33 = n_closure_with_trace(complete_bipartite(3, 3));
    REQUIRE(k33.result == complete_graph(6));
    const Cycle c = unwind_closure_cycle(k33, Cycle{{0, 1, 2, 3, 4, 5}});
    CHECK(is_hamilton_cycle(complete_bipartite(3, 3), c));

    CHECK_THROWS_AS(unwind_closure_cycle(k33, Cycle{{0, 1, 2}}), PreconditionError);
}

TEST_CASE("unwinding works for every Hamilton cycle of a complete closure") {
    Rng rng(32);
    int done = 0;
    while (done < 300) {
        const int n = 5 + done % 10;
        const Graph g = random_graph(rng, n, 0.6);
        const ClosureTrace t = n_closure_with_trace(g);
        if (!t.result.is_complete()) continue;
        Cycle around{random_permutation(rng, n)};
        const Cycle c = unwind_closure_cycle(t, around);
        REQUIRE(is_hamilton_cycle(g, c));
        REQUIRE(c == c.canonical());
        ++done;
    }
}

TEST_CASE("rotation case on K_{2,3}") {
    const Graph g = complete_bipartite(2, 3);
    const LongCycleOutcome out = long_cycle_from_hamilton_path(g, HamiltonPath(g, path_of({2, 0, 3, 1, 4})));
    CHECK(out.which == LongCycleCase::rotation);
    REQUIRE(out.cycle());
    CHECK(*out.cycle() == Cycle{{2, 1, 4, 0}}.canonical());
    CHECK(is_valid_cycle(g, *out.cycle()));
}

TEST_CASE("cutvertex case on two triangles") {
    const Graph g = two_triangles();
    const LongCycleOutcome out = long_cycle_from_hamilton_path(g, HamiltonPath(g, path_of({0, 1, 4, 2, 3})));
    CHECK(out.which == LongCycleCase::cutvertex);
    const CutvertexCertificate* cert = out.certificate();
    REQUIRE(cert);
    CHECK(cert->u_side == (singleton(0) | singleton(1)));
    CHECK(cert->v_side == (singleton(2) | singleton(3)));
    CHECK(cert->z == 4);
    CHECK(validate_certificate(g, *cert));
    CHECK_FALSE(validate_certificate(g.with_edge(1, 2), *cert));
    CHECK_FALSE(validate_certificate(g, {singleton(0), singleton(1) | singleton(2) | singleton(3), 4}));
}

TEST_CASE("bridge and crossing cases") {
    // Path 0..5 with endpoints of degree 2 and 3, plus a chord across the clique split.
    const Graph g = graph_from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 2}, {2, 5}, {3, 5}, {1, 4}});
    const LongCycleOutcome out = long_cycle_from_hamilton_path(g, HamiltonPath(g, path_of({0, 1, 2, 3, 4, 5})));
    REQUIRE(out.cycle());
    CHECK(out.cycle()->length() >= 5);
    CHECK(is_valid_cycle(g, *out.cycle()));

    const Graph k5 = complete_graph(5).without_edge(0, 4);
    CHECK(long_cycle_from_hamilton_path(k5, HamiltonPath(k5, path_of({0, 1, 2, 3, 4}))).which ==
          LongCycleCase::crossing_chord);
}

TEST_CASE("case analysis preconditions") {
    const Graph c5 = cycle_graph(5);
    CHECK_THROWS_AS(long_cycle_from_hamilton_path(c5, HamiltonPath(c5, path_of({0, 1, 2, 3, 4}))), PreconditionError);
    const Graph p6 = cycle_graph(6).without_edge(0, 5);
    CHECK_THROWS_AS(long_cycle_from_hamilton_path(p6, HamiltonPath(p6, path_of({0, 1, 2, 3, 4, 5}))),
                    PreconditionError);
}

TEST_CASE("case analysis outcomes on random paths") {
    Rng rng(33);
    int tried = 0;
    std::array<int, 4> seen{};
    for (int trial = 0; trial < 20000 && tried < 500; ++trial) {
        const int n = 4 + trial % 9;
        const Graph g = random_graph(rng, n, 0.45 + 0.05 * (trial % 5));
        if (!ore_condition(g, 1)) continue;
        const auto path = random_open_hamilton_path(g, rng);
        if (!path) continue;
        ++tried;
        const LongCycleOutcome out = long_cycle_from_hamilton_path(g, HamiltonPath(g, *path));
        ++seen[static_cast<int>(out.which)];
        if (const Cycle* c = out.cycle()) {
            REQUIRE(is_valid_cycle(g, *c));
            REQUIRE(c->length() >= n - 1);
            REQUIRE((out.which == LongCycleCase::rotation) == (c->length() == n - 1));
        } else {
            REQUIRE(out.which == LongCycleCase::cutvertex);
            REQUIRE(validate_certificate(g, *out.certificate()));
            REQUIRE_FALSE(oracle_biconnected(g));
        }
    }
    CHECK(tried == 500);
    for (int count : seen) CHECK(count > 0);
}

TEST_CASE("guaranteed_long_cycle examples") {
    const GuaranteedCycle c5 = guaranteed_long_cycle(cycle_graph(5));
    CHECK(c5.cycle.length() == 5);
    const GuaranteedCycle k23 = guaranteed_long_cycle(complete_bipartite(2, 3));
    CHECK(k23.cycle.length() == 4);
    CHECK(k23.route == LongCycleRoute::hamilton_path);
    const GuaranteedCycle k45 = guaranteed_long_cycle(complete_bipartite(4, 5));
    CHECK(k45.cycle.length() == 8);
    CHECK(is_valid_cycle(complete_bipartite(4, 5), k45.cycle));
    const GuaranteedCycle k6 = guaranteed_long_cycle(complete_graph(6));
    CHECK(k6.route == LongCycleRoute::closure_unwind);
    CHECK_THROWS_AS(guaranteed_long_cycle(two_triangles()), PreconditionError);
    CHECK_THROWS_AS(guaranteed_long_cycle(cycle_graph(6)), PreconditionError);
}

TEST_CASE("guaranteed_long_cycle over every qualifying graph with n <= 8") {
    for (int n = 4; n <= 8; ++n) {
        const auto graphs = enumerate_graphs(n, [](const Graph& g) { return is_biconnected(g) && ore_condition(g, 1); });
        REQUIRE_FALSE(graphs.empty());
        for (const Graph& g : graphs) {
            const GuaranteedCycle r = guaranteed_long_cycle(g);
            REQUIRE(is_valid_cycle(g, r.cycle));
            REQUIRE(r.cycle.length() >= n - 1);
            if (n % 2 == 0) REQUIRE(r.cycle.length() == n);
            REQUIRE(r.route != LongCycleRoute::exact_near);
        }
    }
}
