#include <doctest.h>

#include <algorithm>

#include "orecycle/closure.hpp"
#include "orecycle/cycles.hpp"
#include "orecycle/enumerate.hpp"
#include "orecycle/errors.hpp"
#include "orecycle/gallery.hpp"
#include "orecycle/graph6.hpp"
#include "orecycle/verify.hpp"
#include "support.hpp"

using namespace orecycle;
using namespace orecycle::testing;

namespace {

bool isomorphic(const Graph& a, const Graph& b) { return canonical_form(a).same_class(canonical_form(b)); }

bool lists_class(const std::vector<std::string>& keys, const Graph& g) {
    return std::any_of(keys.begin(), keys.end(), [&](const std::string& k) { return isomorphic(graph6_decode(k), g); });
}

std::vector<std::string> keys_of(const VerificationReport& r, FindingKind kind) {
    std::vector<std::string> out;
    for (const Finding& f : r.findings)
        if (f.kind == kind) out.push_back(f.key);
    return out;
}

}  // namespace

TEST_CASE("theorem2 is clean for n in 4..8 and its counts match the oracles") {
    for (int n = 4; n <= 8; ++n) {
        const VerificationReport r = verify_theorem2(n);
        CAPTURE(n);
        CHECK(r.clean());
        CHECK(r.n == n);
        CHECK(r.check == "theorem2");
        CHECK(r.graphs_scanned == static_cast<long long>(enumerate_classes(n).size()));
        long long satisfying = 0;
        std::vector<std::string> non_hamiltonian;
        for (const Graph& g : enumerate_graphs(n)) {
            const int s = oracle_sigma2(g);
            if (!oracle_biconnected(g) || (s >= 0 && s < n - 1)) continue;
            ++satisfying;
            if (!oracle_hamiltonian(g)) non_hamiltonian.push_back(graph6_encode(g));
        }
        std::sort(non_hamiltonian.begin(), non_hamiltonian.end());
        CHECK(r.condition_satisfying == satisfying);
        CHECK(keys_of(r, FindingKind::survivor) == non_hamiltonian);
        if (n % 2 == 0) CHECK(non_hamiltonian.empty());
    }
}

TEST_CASE("theorem2 survivors at n = 5") {
    const VerificationReport r = verify_theorem2(5);
    const auto survivors = keys_of(r, FindingKind::survivor);
    CHECK(lists_class(survivors, complete_bipartite(2, 3)));
    CHECK(lists_class(survivors, ore_sharpness_graph(5, 0).graph));
    CHECK_FALSE(lists_class(survivors, cycle_graph(5)));
    for (const Finding& f : r.findings) {
        if (f.kind != FindingKind::survivor) continue;
        REQUIRE(f.witness);
        CHECK(f.witness->length() == 4);
        CHECK(is_valid_cycle(graph6_decode(f.key), *f.witness));
    }
}

TEST_CASE("theorem2 skips corpus graphs outside the hypothesis") {
    const std::vector<Graph> corpus{cycle_graph(6), remark_cutvertex_graph(8).graph, complete_bipartite(3, 3)};
    const VerificationReport r = verify_theorem2(std::span<const Graph>(corpus));
    CHECK(r.graphs_scanned == 3);
    CHECK(r.condition_satisfying == 1);
    CHECK(r.clean());
    CHECK(r.n == 0);  // mixed orders
}

TEST_CASE("conjecture k=1") {
    const VerificationReport five = verify_conjecture(5, 1);
    REQUIRE(five.violations.size() == 1);
    CHECK(five.violations[0] == "Dhc");
    CHECK(isomorphic(graph6_decode(five.violations[0]), cycle_graph(5)));
    CHECK(five.k == 1);

    CHECK(verify_conjecture(4, 1).clean());
    CHECK(verify_conjecture(6, 1).clean());
    const VerificationReport eight = verify_conjecture(8, 1);
    CHECK(eight.clean());
    CHECK(lists_class(eight.exceptions, complete_bipartite(4, 4)));
    for (const std::string& key : eight.exceptions) {
        const Graph g = graph6_decode(key);
        CHECK(is_bipartite(g).has_value());
        CHECK(oracle_biconnected(g));
        CHECK_FALSE(oracle_cycle_lengths(g).contains(7));
    }
}

TEST_CASE("conjecture listings re-check by brute force") {
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{5, 1}, {6, 2}, {7, 1}, {7, 2}, {7, 3}}) {
        const VerificationReport r = verify_conjecture(n, k);
        std::vector<std::string> violations, exceptions;
        long long satisfying = 0;
        for (const Graph& g : enumerate_graphs(n)) {
            const int s = oracle_sigma2(g);
            if (!oracle_biconnected(g) || (s >= 0 && s < n - k)) continue;
            ++satisfying;
            if (oracle_cycle_lengths(g).contains(n - k)) continue;
            const bool exempt = !oracle_has_odd_closed_walk(g) && (n - k) % 2 == 1;
            (exempt ? exceptions : violations).push_back(graph6_encode(g));
        }
        std::sort(violations.begin(), violations.end());
        std::sort(exceptions.begin(), exceptions.end());
        CAPTURE(n);
        CAPTURE(k);
        CHECK(r.condition_satisfying == satisfying);
        CHECK(r.violations == violations);
        CHECK(r.exceptions == exceptions);
    }
}

TEST_CASE("conjecture k=3 at n=7 lists C7") {
    const VerificationReport r = verify_conjecture(7, 3);
    CHECK(lists_class(r.violations, cycle_graph(7)));
}

TEST_CASE("conjecture parameter range") {
    CHECK_THROWS_AS(verify_conjecture(6, 3), PreconditionError);
    CHECK_THROWS_AS(verify_conjecture(5, 0), PreconditionError);
    CHECK_THROWS_AS(verify_conjecture(9, 1), PreconditionError);
    CHECK_THROWS_AS(verify_theorem2(3), PreconditionError);
    CHECK_THROWS_AS(verify_hfs(9), PreconditionError);
}

TEST_CASE("hfs is clean and uses the stated threshold") {
    for (int n = 4; n <= 8; ++n) {
        const VerificationReport r = verify_hfs(n);
        CAPTURE(n);
        CHECK(r.clean());
        REQUIRE(r.edge_threshold);
        CHECK(*r.edge_threshold == (n - 1) * (n - 1) / 4 + 1);
        long long satisfying = 0;
        for (const Graph& g : enumerate_graphs(n)) {
            if (g.edge_count() > *r.edge_threshold && oracle_hamiltonian(g)) ++satisfying;
        }
        CHECK(r.condition_satisfying == satisfying);
        for (const std::string& key : r.exceptions) CHECK(is_bipartite(graph6_decode(key)).has_value());
    }
    CHECK(hfs_edge_threshold(5) == 5);
    CHECK(hfs_edge_threshold(9) == 17);
}

TEST_CASE("maximal non-hamiltonian examples") {
    CHECK_FALSE(is_maximal_nonhamiltonian(complete_bipartite(2, 3)));
    CHECK(is_maximal_nonhamiltonian(ore_sharpness_graph(5, 0).graph));
    CHECK_FALSE(is_maximal_nonhamiltonian(cycle_graph(4)));
    CHECK(is_maximal_nonhamiltonian(n_closure(complete_bipartite(3, 4))));
    CHECK_THROWS_AS(is_maximal_nonhamiltonian(complete_graph(5)), PreconditionError);
}

TEST_CASE("parallel verification matches the serial report") {
    for (int jobs : {2, 3, 8}) {
        const VerificationReport serial = verify_theorem2(7);
        const VerificationReport parallel = verify_theorem2(7, {jobs});
        CHECK(parallel.graphs_scanned == serial.graphs_scanned);
        CHECK(parallel.condition_satisfying == serial.condition_satisfying);
        CHECK(parallel.violations == serial.violations);
        REQUIRE(parallel.findings.size() == serial.findings.size());
        for (std::size_t i = 0; i < serial.findings.size(); ++i) {
            CHECK(parallel.findings[i].key == serial.findings[i].key);
            CHECK(parallel.findings[i].detail == serial.findings[i].detail);
        }
        const VerificationReport c_serial = verify_conjecture(8, 1);
        const VerificationReport c_parallel = verify_conjecture(8, 1, {jobs});
        CHECK(c_parallel.exceptions == c_serial.exceptions);
        CHECK(c_parallel.condition_satisfying == c_serial.condition_satisfying);
    }
}
