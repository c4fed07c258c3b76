#pragma once

// Exhaustive checks of the degree-sum results over every graph of an order,
// or over a supplied corpus.

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orecycle/graph.hpp"

namespace orecycle {

enum class FindingKind { violation, exception, survivor };

struct Finding {
    FindingKind kind = FindingKind::violation;
    std::string key;  // graph6
    std::string detail;
    std::optional<Cycle> witness;
};

struct VerificationReport {
    std::string check;  // "theorem2", "conjecture", "hfs"
    int n = 0;          // 0 for a corpus of mixed orders
    std::optional<int> k;
    std::optional<int> edge_threshold;
    long long graphs_scanned = 0;
    long long condition_satisfying = 0;
    std::vector<std::string> violations;  // sorted graph6 keys
    std::vector<std::string> exceptions;
    std::vector<Finding> findings;        // sorted by kind, then key
    std::chrono::duration<double> elapsed{0};

    bool clean() const noexcept { return violations.empty(); }
};

struct VerifyOptions {
    int jobs = 1;
};

// Over 2-connected graphs with sigma2 >= n-1: even n must be hamiltonian,
// odd n must have a cycle of length >= n-1, and each non-hamiltonian graph
// must have closure minimum degree (n-1)/2 with an edge-maximal
// non-hamiltonian closure. Also runs the constructive driver on each graph.
// Built-in range 4 <= n <= 8.
VerificationReport verify_theorem2(int n, const VerifyOptions& options = {});
VerificationReport verify_theorem2(std::span<const Graph> corpus, const VerifyOptions& options = {});

// Over 2-connected graphs with sigma2 >= n-k, those without an (n-k)-cycle
// are exceptions when bipartite with n-k odd and violations otherwise.
// Requires 1 <= k < n/2 and n-k >= 3.
VerificationReport verify_conjecture(int n, int k, const VerifyOptions& options = {});
VerificationReport verify_conjecture(std::span<const Graph> corpus, int k, const VerifyOptions& options = {});

// Hamiltonian graphs with more than floor((n-1)^2/4)+1 edges must be
// pancyclic or bipartite; bipartite ones are listed as exceptions.
// Built-in range 4 <= n <= 8.
VerificationReport verify_hfs(int n, const VerifyOptions& options = {});
VerificationReport verify_hfs(std::span<const Graph> corpus, const VerifyOptions& options = {});

int hfs_edge_threshold(int n);

// No Hamilton cycle, but adding any missing edge creates one. Throws
// PreconditionError on a complete graph.
bool is_maximal_nonhamiltonian(const Graph& g);

const char* to_string(FindingKind k);

}  // namespace orecycle
