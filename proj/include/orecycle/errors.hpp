#pragma once

#include <stdexcept>
#include <string>

namespace orecycle {

// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised by the constructive long-cycle driver when no cycle of length >= n-1
// could be produced for a graph that satisfies the hypothesis. Carries the
// offending graph as graph6 so the case can be replayed.
class TheoremViolation : public std::logic_error {
public:
    TheoremViolation(const std::string& what, std::string graph6)
        : std::logic_error(what + " [graph6: " + graph6 + "]"), graph6_(std::move(graph6)) {}

    const std::string& graph6() const noexcept { return graph6_; }

private:
    std::string graph6_;
};

}  // namespace orecycle
