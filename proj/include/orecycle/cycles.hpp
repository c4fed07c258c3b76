#pragma once

// Exact cycle solvers and the constructive Hamilton/long-cycle machinery.

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "orecycle/closure.hpp"
#include "orecycle/graph.hpp"

namespace orecycle {

// Subset dynamic programming is used when the order is at most this.
inline constexpr int kSubsetDpMaxOrder = 18;

// --- exact solvers -------------------------------------------------------

// Deterministic: subset DP for n <= 18, backtracking above.
std::optional<Cycle> find_hamiltonian_cycle(const Graph& g);
std::optional<Cycle> find_hamiltonian_cycle_backtracking(const Graph& g);
std::optional<Cycle> find_hamiltonian_cycle_dp(const Graph& g);  // n <= 18

std::optional<Path> find_hamilton_path_between(const Graph& g, Vertex x, Vertex y);
std::optional<Path> find_hamilton_path_between_backtracking(const Graph& g, Vertex x, Vertex y);
std::optional<Path> find_hamilton_path_between_dp(const Graph& g, Vertex x, Vertex y);

// length == n delegates to find_hamiltonian_cycle; otherwise subset DP for
// n <= 18 and backtracking with `length` as a hard bound above. Throws
// PreconditionError unless 3 <= length <= n.
std::optional<Cycle> find_cycle_of_length(const Graph& g, int length);
std::optional<Cycle> find_cycle_of_length_backtracking(const Graph& g, int length);
std::optional<Cycle> find_cycle_of_length_dp(const Graph& g, int length);  // n <= 18

struct Circumference {
    int length = 0;
    Cycle witness;
};

// Longest cycle, searching lengths n, n-1, ... ; absent for forests.
std::optional<Circumference> circumference(const Graph& g);

struct CycleSpectrum {
    std::set<int> lengths;
    bool pancyclic = false;
};

CycleSpectrum cycle_spectrum(const Graph& g);

// Independent spectrum route for n <= 18: one subset DP over paths that start
// at their minimum vertex.
std::set<int> cycle_lengths_by_subset_dp(const Graph& g);

// --- proof objects -------------------------------------------------------

// A Hamilton path u_1..u_n with the index sets used by the crossing-chord and
// rotation arguments. Indices are 1-based positions along the path.
class HamiltonPath {
public:
    // Throws PreconditionError unless p is a Hamilton path of g.
    HamiltonPath(const Graph& g, Path p);

    const std::vector<Vertex>& vertices() const noexcept { return path_.vertices; }
    const Path& path() const noexcept { return path_; }
    int order() const noexcept { return path_.length(); }
    Vertex at(int position) const { return path_.vertices.at(position - 1); }  // u_position
    Vertex first() const { return path_.front(); }
    Vertex last() const { return path_.back(); }

    // {i in [1, n-1] : u_1 ~ u_{i+1}}
    const std::vector<int>& first_neighbor_indices() const noexcept { return ix_; }
    // {i in [1, n-1] : u_i ~ u_n}
    const std::vector<int>& last_neighbor_indices() const noexcept { return iy_; }
    // v_1..v_d: the vertex right after each neighbor of u_n; v_d = u_n.
    const std::vector<Vertex>& successors() const noexcept { return successors_; }
    int last_degree() const noexcept { return static_cast<int>(iy_.size()); }

    // Smallest i in both index sets, if any.
    std::optional<int> smallest_crossing_index() const;

private:
    Path path_;
    std::vector<int> ix_;
    std::vector<int> iy_;
    std::vector<Vertex> successors_;
};

// Partition V(G) = U + V + {z} where U+z and V+z are cliques with no U-V edge.
struct CutvertexCertificate {
    VertexSet u_side = 0;
    VertexSet v_side = 0;
    Vertex z = -1;
};

// Checks partition, both cliques, no cross edges, and that z is a cutvertex.
bool validate_certificate(const Graph& g, const CutvertexCertificate& c);

// Hamilton cycle u_1 u_{i0+1} .. u_n u_{i0} .. u_2 for the smallest i0 in
// both index sets. Requires non-adjacent endpoints with degree sum >= n.
Cycle crossing_chord_cycle(const Graph& g, const HamiltonPath& p);

// Hamilton cycle of trace.base from a Hamilton cycle of trace.result, undoing
// added edges in reverse order and rerouting through the crossing chord
// whenever the cycle runs over the edge being removed.
Cycle unwind_closure_cycle(const ClosureTrace& trace, const Cycle& c);

enum class LongCycleCase {
    crossing_chord,  // Hamilton cycle from a shared index
    rotation,        // (n-1)-cycle that skips u_{i0}
    bridge,          // Hamilton cycle through a chord v_j0 u_i0
    cutvertex,       // no cycle; two cliques glued at z
};

struct LongCycleOutcome {
    LongCycleCase which;
    std::variant<Cycle, CutvertexCertificate> witness;

    const Cycle* cycle() const { return std::get_if<Cycle>(&witness); }
    const CutvertexCertificate* certificate() const { return std::get_if<CutvertexCertificate>(&witness); }
};

// Case analysis on a Hamilton path with non-adjacent endpoints whose degree
// sum is at least n-1. Cases are tried in order and every witness is
// validated; a certificate that fails validation means the graph does not
// meet the degree hypothesis globally and raises PreconditionError.
LongCycleOutcome long_cycle_from_hamilton_path(const Graph& g, const HamiltonPath& p);

enum class LongCycleRoute {
    closure_unwind,    // closure complete, Hamilton cycle unwound
    hamilton_path,     // case analysis on a Hamilton path
    exact_hamiltonian, // fallback search
    exact_near,        // fallback search for an (n-1)-cycle
};

struct GuaranteedCycle {
    Cycle cycle;
    LongCycleRoute route;
    std::optional<LongCycleCase> path_case;
};

// Cycle of length >= n-1 for a 2-connected graph with sigma2 >= n-1.
// Throws PreconditionError when the hypothesis fails and TheoremViolation if
// no such cycle can be produced.
GuaranteedCycle guaranteed_long_cycle(const Graph& g);

const char* to_string(LongCycleCase c);
const char* to_string(LongCycleRoute r);

}  // namespace orecycle
