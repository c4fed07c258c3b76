#include "orecycle/closure.hpp"

#include <numeric>
#include <string>

#include "orecycle/errors.hpp"

namespace orecycle {

int Sigma2::value() const {
    if (!value_) throw PreconditionError("sigma2 of a complete graph has no numeric value");
    return *value_;
}

Sigma2 sigma2_nonadjacent(const Graph& g) {
    std::optional<int> best;
    for (Vertex u = 0; u < g.order(); ++u) {
        const VertexSet later_non_neighbors = g.vertices() & ~first_n(u + 1) & ~g.neighbors(u);
        for_each_member(later_non_neighbors, [&](Vertex v) {
            const int sum = g.degree(u) + g.degree(v);
            if (!best || sum < *best) best = sum;
        });
    }
    return best ? Sigma2::of(*best) : Sigma2::complete();
}

bool ore_condition(const Graph& g, int k) {
    if (k < 0 || 2 * k >= g.order()) {
        throw PreconditionError("ore_condition needs 0 <= k < n/2, got k=" + std::to_string(k) +
                                " for n=" + std::to_string(g.order()));
    }
    return sigma2_nonadjacent(g).at_least(g.order() - k);
}

bool dirac_condition(const Graph& g) { return 2 * g.min_degree() >= g.order(); }

ConditionReport condition_report(const Graph& g) {
    ConditionReport r;
    r.n = g.order();
    r.sigma2 = sigma2_nonadjacent(g);
    r.delta = g.min_degree();
    r.biconnected = is_biconnected(g);
    r.bipartite = is_bipartite(g).has_value();
    return r;
}

ClosureTrace n_closure_with_trace(const Graph& g) {
    ClosureTrace trace{g, {}, g};
    Graph& current = trace.result;
    const int n = g.order();
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (current.adjacent(u, v)) continue;
                const int sum = current.degree(u) + current.degree(v);
                if (sum >= n) {
                    trace.added.push_back({{u, v}, sum});
                    current = current.with_edge(u, v);
                    changed = true;
                }
            }
        }
    }
    return trace;
}

Graph n_closure(const Graph& g) { return n_closure_with_trace(g).result; }

namespace {

Fraction reduced(std::int64_t num, std::int64_t den) {
    const std::int64_t d = std::gcd(num, den);
    return {num / d, den / d};
}

}  // namespace

EdgeBoundCheck prop4_edge_bound_check(int n, int delta) {
    if (n < 3 || delta < 2) throw PreconditionError("prop4_edge_bound_check needs n >= 3 and delta >= 2");
    const std::int64_t d = delta;
    const std::int64_t rest = static_cast<std::int64_t>(n) - 1 - d;
    const std::int64_t twice_bound = (d + 1) * d + rest * rest;
    const std::int64_t m = n - 1;
    EdgeBoundCheck out;
    out.lower_bound = reduced(twice_bound, 2);
    out.threshold = (m * m) / 4 + 1;
    out.strict = twice_bound > 2 * out.threshold;
    return out;
}

}  // namespace orecycle
