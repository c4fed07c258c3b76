#include <string>

#include "orecycle/closure.hpp"
#include "orecycle/cycles.hpp"
#include "orecycle/errors.hpp"
#include "orecycle/verify.hpp"

namespace orecycle {

TheoremClassification theorem_classification(const Graph& g) {
    const int n = g.order();
    if (!is_biconnected(g)) throw PreconditionError("theorem_classification needs a 2-connected graph");
    if (!ore_condition(g, 1)) throw PreconditionError("theorem_classification needs sigma2 >= n-1");

    TheoremClassification c;
    c.n = n;
    c.parity = n % 2 == 0 ? ParityCase::even_hamiltonian : ParityCase::odd_long_cycle;
    c.required_circumference = n % 2 == 0 ? n : n - 1;
    c.hamiltonian = find_hamiltonian_cycle(g).has_value();
    const auto circ = circumference(g);
    c.circumference = circ ? circ->length : 0;
    const Graph closure = n_closure(g);
    c.closure_min_degree = closure.min_degree();
    if (!c.hamiltonian) {
        c.closure_degree_is_half = 2 * c.closure_min_degree == n - 1;
        c.closure_maximal_nonhamiltonian = is_maximal_nonhamiltonian(closure);
    }
    return c;
}

}  // namespace orecycle
