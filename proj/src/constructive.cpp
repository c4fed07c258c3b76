#include <algorithm>
#include <stdexcept>
#include <string>

#include "orecycle/cycles.hpp"
#include "orecycle/errors.hpp"
#include "orecycle/graph6.hpp"

namespace orecycle {

HamiltonPath::HamiltonPath(const Graph& g, Path p) : path_(std::move(p)) {
    if (g.order() < 3 || !is_hamilton_path(g, path_)) {
        throw PreconditionError("not a Hamilton path of the graph");
    }
    const int n = order();
    const Vertex x = first();
    const Vertex y = last();
    for (int i = 1; i <= n - 1; ++i) {
        if (g.adjacent(x, at(i + 1))) ix_.push_back(i);
        if (g.adjacent(at(i), y)) {
            iy_.push_back(i);
            successors_.push_back(at(i + 1));
        }
    }
}

std::optional<int> HamiltonPath::smallest_crossing_index() const {
    auto a = ix_.begin();
    auto b = iy_.begin();
    while (a != ix_.end() && b != iy_.end()) {
        if (*a == *b) return *a;
        if (*a < *b) ++a;
        else ++b;
    }
    return std::nullopt;
}

bool validate_certificate(const Graph& g, const CutvertexCertificate& c) {
    const Vertex z = c.z;
    if (z < 0 || z >= g.order()) return false;
    const VertexSet zs = singleton(z);
    if (c.u_side == 0 || c.v_side == 0) return false;
    if ((c.u_side & c.v_side) != 0 || ((c.u_side | c.v_side) & zs) != 0) return false;
    if ((c.u_side | c.v_side | zs) != g.vertices()) return false;
    auto is_clique = [&](VertexSet s) {
        bool ok = true;
        for_each_member(s, [&](Vertex v) { ok = ok && (g.neighbors(v) & s) == (s & ~singleton(v)); });
        return ok;
    };
    if (!is_clique(c.u_side | zs) || !is_clique(c.v_side | zs)) return false;
    bool crossing = false;
    for_each_member(c.u_side, [&](Vertex u) { crossing = crossing || (g.neighbors(u) & c.v_side) != 0; });
    if (crossing) return false;
    return !is_connected_within(g, g.vertices() & ~zs);
}

namespace {

// Appends u_from, u_{from+step}, ..., u_to (inclusive, 1-based).
void append_run(std::vector<Vertex>& out, const HamiltonPath& p, int from, int to) {
    const int step = from <= to ? 1 : -1;
    for (int i = from;; i += step) {
        out.push_back(p.at(i));
        if (i == to) break;
    }
}

Cycle checked(const Graph& g, std::vector<Vertex> order, int expected_length, const char* construction) {
    Cycle c{std::move(order)};
    if (c.length() != expected_length || !is_valid_cycle(g, c)) {
        throw std::logic_error(std::string("constructed ") + construction + " cycle failed validation");
    }
    return c.canonical();
}

// u_1 u_{i0+1} .. u_n u_{i0} u_{i0-1} .. u_2
Cycle crossing_at(const Graph& g, const HamiltonPath& p, int i0) {
    const int n = p.order();
    std::vector<Vertex> order{p.at(1)};
    append_run(order, p, i0 + 1, n);
    if (i0 >= 2) append_run(order, p, i0, 2);
    return checked(g, std::move(order), n, "crossing-chord");
}

}  // namespace

Cycle crossing_chord_cycle(const Graph& g, const HamiltonPath& p) {
    const Vertex x = p.first();
    const Vertex y = p.last();
    if (g.adjacent(x, y)) throw PreconditionError("crossing chord needs non-adjacent path endpoints");
    if (g.degree(x) + g.degree(y) < g.order()) {
        throw PreconditionError("crossing chord needs d(u_1) + d(u_n) >= n, got " +
                                std::to_string(g.degree(x) + g.degree(y)));
    }
    const auto i0 = p.smallest_crossing_index();
    if (!i0) throw std::logic_error("index sets are disjoint despite degree sum >= n");
    return crossing_at(g, p, *i0);
}

Cycle unwind_closure_cycle(const ClosureTrace& trace, const Cycle& c) {
    if (!is_hamilton_cycle(trace.result, c)) {
        throw PreconditionError("cycle is not a Hamilton cycle of the closure");
    }
    Graph current = trace.result;
    Cycle cycle = c;
    for (auto step = trace.added.rbegin(); step != trace.added.rend(); ++step) {
        const auto [x, y] = step->edge;
        const Graph before = current.without_edge(x, y);
        if (cycle.uses_edge(x, y)) {
            // Drop the edge xy and read the rest of the cycle as an x-y path.
            const auto& vs = cycle.vertices;
            const int n = cycle.length();
            const int at_x = static_cast<int>(std::find(vs.begin(), vs.end(), x) - vs.begin());
            const int step_dir = vs[(at_x + 1) % n] == y ? n - 1 : 1;
            Path p;
            for (int i = 0, at = at_x; i < n; ++i, at = (at + step_dir) % n) p.vertices.push_back(vs[at]);
            cycle = crossing_chord_cycle(before, HamiltonPath(before, std::move(p)));
        }
        current = before;
    }
    return cycle.canonical();
}

LongCycleOutcome long_cycle_from_hamilton_path(const Graph& g, const HamiltonPath& p) {
    const int n = p.order();
    const Vertex x = p.first();
    const Vertex y = p.last();
    if (g.adjacent(x, y)) throw PreconditionError("path endpoints must be non-adjacent");
    if (g.degree(x) + g.degree(y) < n - 1) {
        throw PreconditionError("path endpoints need degree sum >= n-1, got " +
                                std::to_string(g.degree(x) + g.degree(y)));
    }

    if (const auto i0 = p.smallest_crossing_index()) {
        return {LongCycleCase::crossing_chord, crossing_at(g, p, *i0)};
    }

    // The index sets are now disjoint with sizes summing to n-1, so every
    // i in [1, n-1] lies in exactly one of them.
    const auto& iy = p.last_neighbor_indices();
    const auto& v = p.successors();
    const int d = static_cast<int>(v.size());
    for (int j = 1; j < d; ++j) {
        if (g.adjacent(v[j - 1], y)) continue;
        const int i0 = iy[j - 1] + 1;  // v_j = u_{i0}, and u_1 ~ u_{i0+1}
        std::vector<Vertex> order{p.at(1)};
        append_run(order, p, i0 + 1, n);
        if (i0 - 1 >= 2) append_run(order, p, i0 - 1, 2);
        return {LongCycleCase::rotation, checked(g, std::move(order), n - 1, "rotation")};
    }

    // All of v_1..v_{d-1} are neighbors of y: y's neighbors are exactly
    // u_{n-d}..u_{n-1}, and v_j = u_{n-d+j}.
    const int z_at = n - d;
    for (int i0 = 1; i0 <= n - d - 1; ++i0) {
        for (int j0 = 1; j0 <= d; ++j0) {
            if (!g.adjacent(p.at(i0), p.at(z_at + j0))) continue;
            // u_1..u_{i0} v_{j0}..v_d v_{j0-1}..u_{i0+1}
            std::vector<Vertex> order;
            append_run(order, p, 1, i0);
            append_run(order, p, z_at + j0, n);
            append_run(order, p, z_at + j0 - 1, i0 + 1);
            return {LongCycleCase::bridge, checked(g, std::move(order), n, "bridge")};
        }
    }

    CutvertexCertificate cert;
    for (int i = 1; i < z_at; ++i) cert.u_side |= singleton(p.at(i));
    for (int i = z_at + 1; i <= n; ++i) cert.v_side |= singleton(p.at(i));
    cert.z = p.at(z_at);
    if (!validate_certificate(g, cert)) {
        throw PreconditionError("two-clique split around u_" + std::to_string(z_at) +
                                " is not a cutvertex certificate; the degree-sum hypothesis fails");
    }
    return {LongCycleCase::cutvertex, cert};
}

GuaranteedCycle guaranteed_long_cycle(const Graph& g) {
    const int n = g.order();
    if (!is_biconnected(g)) throw PreconditionError("guaranteed_long_cycle needs a 2-connected graph");
    if (!ore_condition(g, 1)) throw PreconditionError("guaranteed_long_cycle needs sigma2 >= n-1");

    const ClosureTrace trace = n_closure_with_trace(g);
    if (trace.result.is_complete()) {
        Cycle around;
        for (Vertex v = 0; v < n; ++v) around.vertices.push_back(v);
        Cycle c = unwind_closure_cycle(trace, around);
        if (!is_hamilton_cycle(g, c)) throw std::logic_error("unwound cycle is not a Hamilton cycle");
        return {std::move(c), LongCycleRoute::closure_unwind, std::nullopt};
    }

    for (Vertex x = 0; x < n; ++x) {
        const VertexSet later_non_neighbors = g.vertices() & ~first_n(x + 1) & ~g.neighbors(x);
        std::optional<GuaranteedCycle> found;
        for_each_member(later_non_neighbors, [&](Vertex y) {
            if (found) return;
            auto path = find_hamilton_path_between(g, x, y);
            if (!path) return;
            const LongCycleOutcome outcome = long_cycle_from_hamilton_path(g, HamiltonPath(g, std::move(*path)));
            if (outcome.certificate()) {
                throw TheoremViolation("case analysis produced a cutvertex in a 2-connected graph",
                                       graph6_encode(g));
            }
            found = GuaranteedCycle{*outcome.cycle(), LongCycleRoute::hamilton_path, outcome.which};
        });
        if (found) return std::move(*found);
    }

    if (auto c = find_hamiltonian_cycle(g)) return {std::move(*c), LongCycleRoute::exact_hamiltonian, std::nullopt};
    if (auto c = find_cycle_of_length(g, n - 1)) return {std::move(*c), LongCycleRoute::exact_near, std::nullopt};
    throw TheoremViolation("no cycle of length >= n-1", graph6_encode(g));
}

const char* to_string(LongCycleCase c) {
    switch (c) {
        case LongCycleCase::crossing_chord: return "crossing-chord";
        case LongCycleCase::rotation: return "rotation";
        case LongCycleCase::bridge: return "bridge";
        case LongCycleCase::cutvertex: return "cutvertex";
    }
    return "?";
}

const char* to_string(LongCycleRoute r) {
    switch (r) {
        case LongCycleRoute::closure_unwind: return "closure-unwind";
        case LongCycleRoute::hamilton_path: return "hamilton-path";
        case LongCycleRoute::exact_hamiltonian: return "exact-hamiltonian";
        case LongCycleRoute::exact_near: return "exact-near-hamiltonian";
    }
    return "?";
}

}  // namespace orecycle
