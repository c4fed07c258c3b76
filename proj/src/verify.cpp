#include "orecycle/verify.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <thread>

#include "orecycle/closure.hpp"
#include "orecycle/cycles.hpp"
#include "orecycle/enumerate.hpp"
#include "orecycle/errors.hpp"
#include "orecycle/graph6.hpp"

namespace orecycle {

bool is_maximal_nonhamiltonian(const Graph& g) {
    if (g.is_complete()) throw PreconditionError("is_maximal_nonhamiltonian needs a non-complete graph");
    if (find_hamiltonian_cycle(g)) return false;
    for (Vertex u = 0; u < g.order(); ++u) {
        const VertexSet later_non_neighbors = g.vertices() & ~first_n(u + 1) & ~g.neighbors(u);
        bool all = true;
        for_each_member(later_non_neighbors, [&](Vertex v) { all = all && find_hamiltonian_cycle(g.with_edge(u, v)); });
        if (!all) return false;
    }
    return true;
}

int hfs_edge_threshold(int n) { return (n - 1) * (n - 1) / 4 + 1; }

const char* to_string(FindingKind k) {
    switch (k) {
        case FindingKind::violation: return "violation";
        case FindingKind::exception: return "exception";
        case FindingKind::survivor: return "survivor";
    }
    return "?";
}

namespace {

struct Tally {
    long long scanned = 0;
    long long satisfying = 0;
    std::vector<Finding> findings;

    void merge(Tally&& other) {
        scanned += other.scanned;
        satisfying += other.satisfying;
        std::move(other.findings.begin(), other.findings.end(), std::back_inserter(findings));
    }
};

// Returns true when the graph meets the check's hypothesis.
using GraphCheck = std::function<bool(const Graph&, std::vector<Finding>&)>;

VerificationReport run(std::string name, std::span<const Graph> graphs, const GraphCheck& check,
                       const VerifyOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const int jobs = std::max(1, options.jobs);
    std::vector<Tally> partial(static_cast<std::size_t>(jobs));
    auto worker = [&](int id) {
        Tally& t = partial[static_cast<std::size_t>(id)];
        for (std::size_t i = static_cast<std::size_t>(id); i < graphs.size(); i += static_cast<std::size_t>(jobs)) {
            ++t.scanned;
            if (check(graphs[i], t.findings)) ++t.satisfying;
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (int id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    }
    Tally total;
    for (auto& t : partial) total.merge(std::move(t));

    VerificationReport r;
    r.check = std::move(name);
    r.graphs_scanned = total.scanned;
    r.condition_satisfying = total.satisfying;
    r.findings = std::move(total.findings);
    std::sort(r.findings.begin(), r.findings.end(), [](const Finding& a, const Finding& b) {
        return std::tie(a.kind, a.key) < std::tie(b.kind, b.key);
    });
    for (const auto& f : r.findings) {
        if (f.kind == FindingKind::violation) r.violations.push_back(f.key);
        if (f.kind == FindingKind::exception) r.exceptions.push_back(f.key);
    }
    r.violations.erase(std::unique(r.violations.begin(), r.violations.end()), r.violations.end());
    r.exceptions.erase(std::unique(r.exceptions.begin(), r.exceptions.end()), r.exceptions.end());
    if (!graphs.empty()) {
        const int n = graphs.front().order();
        const bool uniform = std::all_of(graphs.begin(), graphs.end(), [n](const Graph& g) { return g.order() == n; });
        r.n = uniform ? n : 0;
    }
    r.elapsed = std::chrono::steady_clock::now() - started;
    return r;
}

void require_builtin(int n, int lo, const char* what) {
    if (n < lo || n > kEnumerateMaxOrder) {
        throw PreconditionError(std::string(what) + " covers " + std::to_string(lo) + " <= n <= " +
                                std::to_string(kEnumerateMaxOrder) + " built in; supply a graph6 corpus otherwise");
    }
}

bool theorem2_check(const Graph& g, std::vector<Finding>& out) {
    const int n = g.order();
    if (n < 3 || !is_biconnected(g) || !sigma2_nonadjacent(g).at_least(n - 1)) return false;
    const std::string key = graph6_encode(g);
    auto flag = [&](std::string detail, std::optional<Cycle> witness = std::nullopt) {
        out.push_back({FindingKind::violation, key, std::move(detail), std::move(witness)});
    };

    try {
        const GuaranteedCycle built = guaranteed_long_cycle(g);
        if (built.cycle.length() < n - 1 || !is_valid_cycle(g, built.cycle)) {
            flag("constructive driver returned an invalid or short cycle", built.cycle);
        }
    } catch (const TheoremViolation& e) {
        flag(e.what());
    }

    if (find_hamiltonian_cycle(g)) return true;
    if (n % 2 == 0) {
        flag("even order but not hamiltonian");
        return true;
    }
    auto near = find_cycle_of_length(g, n - 1);
    if (!near) flag("odd order without a cycle of length n-1");
    const Graph closure = n_closure(g);
    if (closure.min_degree() != (n - 1) / 2) {
        flag("non-hamiltonian with closure minimum degree " + std::to_string(closure.min_degree()));
    }
    if (!is_maximal_nonhamiltonian(closure)) flag("closure is not maximal non-hamiltonian");
    out.push_back({FindingKind::survivor, key,
                   "non-hamiltonian; closure minimum degree " + std::to_string(closure.min_degree()), near});
    return true;
}

}  // namespace

VerificationReport verify_theorem2(std::span<const Graph> corpus, const VerifyOptions& options) {
    return run("theorem2", corpus, theorem2_check, options);
}

VerificationReport verify_theorem2(int n, const VerifyOptions& options) {
    require_builtin(n, 4, "verify_theorem2");
    const auto started = std::chrono::steady_clock::now();
    const auto graphs = enumerate_graphs(n);
    VerificationReport r = verify_theorem2(std::span<const Graph>(graphs), options);
    r.elapsed = std::chrono::steady_clock::now() - started;
    return r;
}

VerificationReport verify_conjecture(std::span<const Graph> corpus, int k, const VerifyOptions& options) {
    for (const Graph& g : corpus) {
        const int n = g.order();
        if (k < 1 || 2 * k >= n || n - k < 3) {
            throw PreconditionError("verify_conjecture needs 1 <= k < n/2 and n-k >= 3, got n=" +
                                    std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    auto check = [k](const Graph& g, std::vector<Finding>& out) {
        const int n = g.order();
        const int target = n - k;
        if (!is_biconnected(g) || !sigma2_nonadjacent(g).at_least(target)) return false;
        if (find_cycle_of_length(g, target)) return true;
        const bool exempt = is_bipartite(g).has_value() && target % 2 == 1;
        out.push_back({exempt ? FindingKind::exception : FindingKind::violation, graph6_encode(g),
                       "no cycle of length " + std::to_string(target) + (exempt ? " (bipartite, odd length)" : ""),
                       std::nullopt});
        return true;
    };
    VerificationReport r = run("conjecture", corpus, check, options);
    r.k = k;
    return r;
}

VerificationReport verify_conjecture(int n, int k, const VerifyOptions& options) {
    if (n < 3) throw PreconditionError("verify_conjecture needs n >= 3");
    if (k < 1 || 2 * k >= n || n - k < 3) {
        throw PreconditionError("verify_conjecture needs 1 <= k < n/2 and n-k >= 3, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
    }
    require_builtin(n, 3, "verify_conjecture");
    const auto started = std::chrono::steady_clock::now();
    const auto graphs = enumerate_graphs(n);
    VerificationReport r = verify_conjecture(std::span<const Graph>(graphs), k, options);
    r.n = n;
    r.elapsed = std::chrono::steady_clock::now() - started;
    return r;
}

VerificationReport verify_hfs(std::span<const Graph> corpus, const VerifyOptions& options) {
    auto check = [](const Graph& g, std::vector<Finding>& out) {
        const int n = g.order();
        if (n < 3 || g.edge_count() <= hfs_edge_threshold(n)) return false;
        auto ham = find_hamiltonian_cycle(g);
        if (!ham) return false;
        if (cycle_spectrum(g).pancyclic) return true;
        const bool bipartite = is_bipartite(g).has_value();
        out.push_back({bipartite ? FindingKind::exception : FindingKind::violation, graph6_encode(g),
                       bipartite ? "bipartite, not pancyclic" : "neither pancyclic nor bipartite", ham});
        return true;
    };
    VerificationReport r = run("hfs", corpus, check, options);
    if (r.n > 0) r.edge_threshold = hfs_edge_threshold(r.n);
    return r;
}

VerificationReport verify_hfs(int n, const VerifyOptions& options) {
    require_builtin(n, 4, "verify_hfs");
    const auto started = std::chrono::steady_clock::now();
    const auto graphs = enumerate_graphs(n);
    VerificationReport r = verify_hfs(std::span<const Graph>(graphs), options);
    r.n = n;
    r.elapsed = std::chrono::steady_clock::now() - started;
    r.edge_threshold = hfs_edge_threshold(n);
    return r;
}

}  // namespace orecycle
