#include <algorithm>
#include <string>

#include "orecycle/cycles.hpp"
#include "orecycle/errors.hpp"

namespace orecycle {

namespace {

// How often (in search depth) the backtracking solvers test whether the
// unvisited part is still connected to the path's free end.
constexpr int kConnectivityStride = 3;

// --- backtracking ----------------------------------------------------------

// Grows a path from `start` and accepts it once every vertex of `targets` is
// covered and `finish` holds. For a Hamilton cycle `close_at` is the start; for
// a Hamilton x-y path it is y, which must be the final vertex.
class HamiltonSearch {
public:
    HamiltonSearch(const Graph& g, Vertex start, Vertex terminal, bool cycle)
        : g_(g), start_(start), terminal_(terminal), cycle_(cycle) {
        path_.reserve(g.order());
    }

    std::optional<std::vector<Vertex>> run() {
        path_.assign(1, start_);
        const VertexSet unvisited = g_.vertices() & ~singleton(start_);
        if (extend(start_, unvisited, 1)) return path_;
        return std::nullopt;
    }

private:
    bool extend(Vertex end, VertexSet unvisited, int depth) {
        if (unvisited == 0) {
            return cycle_ ? g_.adjacent(end, start_) : end == terminal_;
        }
        if (!feasible(end, unvisited, depth)) return false;
        VertexSet next = g_.neighbors(end) & unvisited;
        // The terminal of a path is only entered as the last vertex.
        if (!cycle_ && unvisited != singleton(terminal_)) next &= ~singleton(terminal_);
        bool found = false;
        for_each_member(next, [&](Vertex w) {
            if (found) return;
            path_.push_back(w);
            if (extend(w, unvisited & ~singleton(w), depth + 1)) {
                found = true;
                return;
            }
            path_.pop_back();
        });
        return found;
    }

    bool feasible(Vertex end, VertexSet unvisited, int depth) const {
        // Every unvisited vertex still needs two usable neighbors (one for the
        // path terminal).
        const VertexSet usable = unvisited | singleton(end) | (cycle_ ? singleton(start_) : 0);
        bool ok = true;
        for_each_member(unvisited, [&](Vertex w) {
            if (!ok) return;
            const int need = (!cycle_ && w == terminal_) ? 1 : 2;
            if (set_size(g_.neighbors(w) & usable & ~singleton(w)) < need) ok = false;
        });
        if (!ok) return false;
        if (depth % kConnectivityStride == 0) {
            return is_connected_within(g_, unvisited | singleton(end));
        }
        return true;
    }

    const Graph& g_;
    Vertex start_;
    Vertex terminal_;
    bool cycle_;
    std::vector<Vertex> path_;
};

// --- subset dynamic programming --------------------------------------------

// reach[S >> 1] for S a subset of {1..n-1} (bit 0 clear): the vertices v in S
// such that some path from 0 covers exactly S + {0} and ends at v.
std::vector<std::uint32_t> reach_from_zero(const Graph& g) {
    const int n = g.order();
    const std::size_t states = std::size_t{1} << (n - 1);
    std::vector<std::uint32_t> reach(states, 0);
    for (std::size_t idx = 1; idx < states; ++idx) {
        const VertexSet s = static_cast<VertexSet>(idx) << 1;
        std::uint32_t ends = 0;
        for_each_member(s, [&](Vertex v) {
            const VertexSet rest = s & ~singleton(v);
            const bool reachable = rest == 0 ? g.adjacent(0, v)
                                             : (g.neighbors(v) & (static_cast<VertexSet>(reach[rest >> 1]))) != 0;
            if (reachable) ends |= static_cast<std::uint32_t>(singleton(v));
        });
        reach[idx] = ends;
    }
    return reach;
}

// Walks back from `end` through reach[] to recover the vertex order 0 .. end.
std::vector<Vertex> recover_path(const Graph& g, const std::vector<std::uint32_t>& reach, VertexSet s, Vertex end) {
    std::vector<Vertex> reversed{end};
    while (true) {
        s &= ~singleton(end);
        if (s == 0) break;
        const VertexSet options = g.neighbors(end) & static_cast<VertexSet>(reach[s >> 1]);
        end = static_cast<Vertex>(std::countr_zero(options));
        reversed.push_back(end);
    }
    reversed.push_back(0);
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

void require_dp_order(const Graph& g) {
    if (g.order() > kSubsetDpMaxOrder) {
        throw PreconditionError("subset DP supports order <= " + std::to_string(kSubsetDpMaxOrder));
    }
}

std::vector<Vertex> swap_labels(int n, Vertex a, Vertex b) {
    std::vector<Vertex> label(n);
    for (Vertex v = 0; v < n; ++v) label[v] = v;
    std::swap(label[a], label[b]);
    return label;
}

void check_length(const Graph& g, int length) {
    if (length < 3 || length > g.order()) {
        throw PreconditionError("cycle length must be in [3, n], got " + std::to_string(length));
    }
}

void check_endpoints(const Graph& g, Vertex x, Vertex y) {
    if (x < 0 || y < 0 || x >= g.order() || y >= g.order()) throw PreconditionError("path endpoint out of range");
    if (x == y) throw PreconditionError("path endpoints must differ");
}

// ends[S]: vertices v such that a path starting at min(S) covers S and ends at v.
std::vector<std::uint32_t> paths_from_minimum(const Graph& g) {
    const std::size_t states = std::size_t{1} << g.order();
    std::vector<std::uint32_t> ends(states, 0);
    for (std::size_t idx = 1; idx < states; ++idx) {
        const auto s = static_cast<VertexSet>(idx);
        const auto root = static_cast<Vertex>(std::countr_zero(s));
        if (s == singleton(root)) {
            ends[idx] = static_cast<std::uint32_t>(s);
            continue;
        }
        std::uint32_t out = 0;
        for_each_member(s & ~singleton(root), [&](Vertex v) {
            const VertexSet rest = s & ~singleton(v);
            if ((g.neighbors(v) & static_cast<VertexSet>(ends[rest])) != 0) out |= static_cast<std::uint32_t>(singleton(v));
        });
        ends[idx] = out;
    }
    return ends;
}

// S closes into a cycle through all of its vertices.
bool closes(const Graph& g, const std::vector<std::uint32_t>& ends, VertexSet s) {
    const auto root = static_cast<Vertex>(std::countr_zero(s));
    return (static_cast<VertexSet>(ends[s]) & g.neighbors(root)) != 0;
}

std::vector<Vertex> recover_cycle(const Graph& g, const std::vector<std::uint32_t>& ends, VertexSet s) {
    const auto root = static_cast<Vertex>(std::countr_zero(s));
    Vertex end = static_cast<Vertex>(std::countr_zero(static_cast<VertexSet>(ends[s]) & g.neighbors(root)));
    std::vector<Vertex> reversed{end};
    for (s &= ~singleton(end); s != singleton(root); s &= ~singleton(end)) {
        end = static_cast<Vertex>(std::countr_zero(g.neighbors(end) & static_cast<VertexSet>(ends[s]) & ~singleton(root)));
        reversed.push_back(end);
    }
    reversed.push_back(root);
    return {reversed.rbegin(), reversed.rend()};
}

// --- exact cycles of a fixed length -------------------------------------------

// Cycles whose minimum vertex is `root`, built as root, w_1, ..., w_{len-1}
// with w_1 < w_{len-1} so each cycle is reached in one orientation only.
class FixedLengthSearch {
public:
    FixedLengthSearch(const Graph& g, int length) : g_(g), length_(length) { path_.reserve(length); }

    std::optional<std::vector<Vertex>> run() {
        for (Vertex root = 0; root + length_ <= g_.order(); ++root) {
            root_ = root;
            const VertexSet allowed = g_.vertices() & ~first_n(root + 1);
            if (set_size(g_.neighbors(root) & allowed) < 2) continue;
            path_.assign(1, root);
            if (extend(root, allowed)) return path_;
        }
        return std::nullopt;
    }

private:
    bool extend(Vertex end, VertexSet free) {
        const int depth = static_cast<int>(path_.size());
        if (depth == length_) return g_.adjacent(end, root_) && path_[1] < end;
        const int remaining = length_ - depth;
        if (depth >= 2) {
            // Vertices still reachable from the free end, and closing candidates.
            VertexSet reach = 0;
            VertexSet frontier = g_.neighbors(end) & free;
            while (frontier != 0) {
                reach |= frontier;
                VertexSet next = 0;
                for_each_member(frontier, [&](Vertex v) { next |= g_.neighbors(v); });
                frontier = next & free & ~reach;
            }
            if (set_size(reach) < remaining) return false;
            if ((reach & g_.neighbors(root_) & ~first_n(path_[1] + 1)) == 0) return false;
        }
        VertexSet next = g_.neighbors(end) & free;
        if (remaining == 1) next &= g_.neighbors(root_);
        bool found = false;
        for_each_member(next, [&](Vertex w) {
            if (found) return;
            path_.push_back(w);
            if (extend(w, free & ~singleton(w))) {
                found = true;
                return;
            }
            path_.pop_back();
        });
        return found;
    }

    const Graph& g_;
    int length_;
    Vertex root_ = 0;
    std::vector<Vertex> path_;
};

}  // namespace

std::optional<Cycle> find_hamiltonian_cycle_backtracking(const Graph& g) {
    if (g.order() < 3) return std::nullopt;
    HamiltonSearch search(g, 0, 0, true);
    if (auto order = search.run()) return Cycle{std::move(*order)}.canonical();
    return std::nullopt;
}

std::optional<Cycle> find_hamiltonian_cycle_dp(const Graph& g) {
    require_dp_order(g);
    const int n = g.order();
    if (n < 3) return std::nullopt;
    const auto reach = reach_from_zero(g);
    const VertexSet all = g.vertices() & ~singleton(0);
    const VertexSet closers = static_cast<VertexSet>(reach[all >> 1]) & g.neighbors(0);
    if (closers == 0) return std::nullopt;
    const auto end = static_cast<Vertex>(std::countr_zero(closers));
    return Cycle{recover_path(g, reach, all, end)}.canonical();
}

std::optional<Cycle> find_hamiltonian_cycle(const Graph& g) {
    if (g.order() <= kSubsetDpMaxOrder) return find_hamiltonian_cycle_dp(g);
    return find_hamiltonian_cycle_backtracking(g);
}

std::optional<Path> find_hamilton_path_between_backtracking(const Graph& g, Vertex x, Vertex y) {
    check_endpoints(g, x, y);
    HamiltonSearch search(g, x, y, false);
    if (auto order = search.run()) return Path{std::move(*order)};
    return std::nullopt;
}

std::optional<Path> find_hamilton_path_between_dp(const Graph& g, Vertex x, Vertex y) {
    check_endpoints(g, x, y);
    require_dp_order(g);
    // Move x to label 0, solve, then map the labels back.
    const auto label = swap_labels(g.order(), 0, x);
    const Graph h = g.relabeled(label);
    const Vertex target = label[y];
    const auto reach = reach_from_zero(h);
    const VertexSet all = h.vertices() & ~singleton(0);
    if (!contains(reach[all >> 1], target)) return std::nullopt;
    Path p{recover_path(h, reach, all, target)};
    for (Vertex& v : p.vertices) v = label[v];  // the swap is its own inverse
    return p;
}

std::optional<Path> find_hamilton_path_between(const Graph& g, Vertex x, Vertex y) {
    if (g.order() <= kSubsetDpMaxOrder) return find_hamilton_path_between_dp(g, x, y);
    return find_hamilton_path_between_backtracking(g, x, y);
}

std::optional<Cycle> find_cycle_of_length(const Graph& g, int length) {
    check_length(g, length);
    if (length == g.order()) return find_hamiltonian_cycle(g);
    if (g.order() <= kSubsetDpMaxOrder) return find_cycle_of_length_dp(g, length);
    return find_cycle_of_length_backtracking(g, length);
}

std::optional<Circumference> circumference(const Graph& g) {
    for (int length = g.order(); length >= 3; --length) {
        if (auto c = find_cycle_of_length(g, length)) return Circumference{length, std::move(*c)};
    }
    return std::nullopt;
}

std::optional<Cycle> find_cycle_of_length_backtracking(const Graph& g, int length) {
    check_length(g, length);
    FixedLengthSearch search(g, length);
    if (auto order = search.run()) return Cycle{std::move(*order)}.canonical();
    return std::nullopt;
}

std::optional<Cycle> find_cycle_of_length_dp(const Graph& g, int length) {
    check_length(g, length);
    require_dp_order(g);
    const auto ends = paths_from_minimum(g);
    for (std::size_t idx = 1; idx < ends.size(); ++idx) {
        const auto s = static_cast<VertexSet>(idx);
        if (set_size(s) == length && closes(g, ends, s)) return Cycle{recover_cycle(g, ends, s)}.canonical();
    }
    return std::nullopt;
}

std::set<int> cycle_lengths_by_subset_dp(const Graph& g) {
    require_dp_order(g);
    std::set<int> lengths;
    if (g.order() < 3) return lengths;
    const auto ends = paths_from_minimum(g);
    for (std::size_t idx = 1; idx < ends.size(); ++idx) {
        const auto s = static_cast<VertexSet>(idx);
        if (set_size(s) >= 3 && closes(g, ends, s)) lengths.insert(set_size(s));
    }
    return lengths;
}

CycleSpectrum cycle_spectrum(const Graph& g) {
    CycleSpectrum out;
    if (g.order() <= kSubsetDpMaxOrder) {
        out.lengths = cycle_lengths_by_subset_dp(g);
    } else {
        for (int length = 3; length <= g.order(); ++length) {
            if (find_cycle_of_length(g, length)) out.lengths.insert(length);
        }
    }
    out.pancyclic = g.order() >= 3 && static_cast<int>(out.lengths.size()) == g.order() - 2;
    return out;
}

}  // namespace orecycle
