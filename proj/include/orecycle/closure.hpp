#pragma once

// Degree-sum conditions and the n-closure.

#include <cstdint>
#include <optional>
#include <vector>

#include "orecycle/graph.hpp"

namespace orecycle {

// Minimum of d(x)+d(y) over non-adjacent pairs. A complete graph has no such
// pair; it is represented as its own state rather than as a large number.
class Sigma2 {
public:
    static Sigma2 complete() { return Sigma2(); }
    static Sigma2 of(int value) { return Sigma2(value); }

    bool is_complete() const noexcept { return !value_.has_value(); }
    int value() const;  // throws PreconditionError when complete
    bool at_least(int threshold) const noexcept { return !value_ || *value_ >= threshold; }

    friend bool operator==(const Sigma2&, const Sigma2&) = default;

private:
    Sigma2() = default;
    explicit Sigma2(int v) : value_(v) {}
    std::optional<int> value_;
};

Sigma2 sigma2_nonadjacent(const Graph& g);

// sigma2 >= n - k; requires 0 <= k < n/2.
bool ore_condition(const Graph& g, int k);

// delta >= n/2.
bool dirac_condition(const Graph& g);

struct ConditionReport {
    int n = 0;
    Sigma2 sigma2 = Sigma2::complete();
    int delta = 0;
    bool biconnected = false;
    bool bipartite = false;
};

ConditionReport condition_report(const Graph& g);

struct ClosureStep {
    Edge edge;       // (smaller, larger)
    int degree_sum;  // measured just before the edge was added
};

struct ClosureTrace {
    Graph base;
    std::vector<ClosureStep> added;
    Graph result;
};

// Repeated lexicographic sweeps over pairs (u < v), joining any non-adjacent
// pair whose current degree sum is at least n, until a sweep adds nothing.
ClosureTrace n_closure_with_trace(const Graph& g);
Graph n_closure(const Graph& g);

// Exact non-negative rational, kept in lowest terms.
struct Fraction {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Edge-count lower bound ((delta+1)delta + (n-1-delta)^2) / 2 for a graph of
// order n and minimum degree delta whose non-adjacent pairs sum to >= n-1,
// against the pancyclicity threshold floor((n-1)^2/4) + 1.
struct EdgeBoundCheck {
    Fraction lower_bound;
    std::int64_t threshold = 0;
    bool strict = false;  // lower_bound > threshold
};

EdgeBoundCheck prop4_edge_bound_check(int n, int delta);

enum class ParityCase { even_hamiltonian, odd_long_cycle };

struct TheoremClassification {
    int n = 0;
    ParityCase parity = ParityCase::even_hamiltonian;
    bool hamiltonian = false;
    int circumference = 0;           // measured exactly
    int required_circumference = 0;  // n for even n, n-1 for odd n
    int closure_min_degree = 0;
    // Populated only for non-hamiltonian inputs.
    std::optional<bool> closure_degree_is_half;
    std::optional<bool> closure_maximal_nonhamiltonian;
};

// Requires a 2-connected graph with sigma2 >= n-1.
TheoremClassification theorem_classification(const Graph& g);

}  // namespace orecycle
