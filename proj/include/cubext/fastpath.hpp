#pragma once

// Direct solver for instances whose constrained edges are far apart: one
// swap on a standard-coloring four-cycle per prescribed edge.

#include <variant>
#include <vector>

#include "cubext/coloring.hpp"
#include "cubext/report.hpp"

namespace cubext {

/// A matching whose edges are pairwise at edge distance >= t.
bool is_distance_t_matching(int d, const std::vector<EdgeRef>& edges, int t);

struct FastpathSolved {
    TotalColoring coloring;
    PartialColoring phi_prime;       // precoloring plus promoted conflict edges
    std::vector<PlannedSwap> swaps;  // in lexicographic order of their edge
    BoundReport report;
};

struct FastpathInapplicable {
    EdgeRef first;  // a pair closer than the required distance
    EdgeRef second;
};

struct FastpathFailed {
    EdgeRef edge;  // list holds every color, or a swap did not fit
};

using FastpathOutcome = std::variant<FastpathSolved, FastpathInapplicable, FastpathFailed>;

/// Uses inst.params.fastpath_distance as the separation. Below 3 the swaps run
/// one at a time and any mismatch is reported as FastpathFailed.
FastpathOutcome solve_matching_instance(const Instance& inst);

}  // namespace cubext
