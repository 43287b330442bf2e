#ifndef RELAYSCHED_EXACT_HPP
#define RELAYSCHED_EXACT_HPP

#include <stdexcept>

#include "relaysched/aco.hpp"
#include "relaysched/graph.hpp"

namespace relaysched {

struct GraphSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact maximum-weight clique. Graphs of at most 25 vertices are solved by
// exhaustive clique enumeration; larger ones by depth-first branch-and-bound
// whose residual-weight bound sums, over greedily built independence classes
// of the remaining candidates, the heaviest candidate of each class.
// Throws GraphSizeError above vertex_cap.
SolveResult solve_exact(const WeightedGraph& graph, int vertex_cap = 400);

}  // namespace relaysched

#endif
