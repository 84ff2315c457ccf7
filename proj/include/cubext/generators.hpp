#pragma once

// Instance generators: the half-palette negative constructions around the
// edge (0, dim0), and seeded random instances.

#include <cstdint>

#include "cubext/coloring.hpp"

namespace cubext {

/// ceil(d/2) edges at vertex 0 take colors 1..ceil(d/2), floor(d/2) edges at
/// vertex 1 take the rest, so edge (0, dim0) has no color left.
Instance gen_unextendable_precoloring(int d);

/// ceil(d/2) edges at each endpoint of (0, dim0) forbid one half of the
/// palette, forcing (0, dim0) into both halves.
Instance gen_unavoidable_lists(int d);

/// Both constructions mixed with a precolored edges and b listed edges per
/// endpoint (a = alpha*d, b = beta*d). Throws ParameterWindow outside the
/// infeasibility window or when a, b are not integers.
Instance gen_combined(int d, double alpha, double beta);
Instance gen_combined_counts(int d, int a, int b);

struct RandomOptions {
    double precolor_prob = 0.15;  // chance an edge is offered a precolor
    double list_prob = 0.15;      // chance an edge gets a list
};

/// Proper precoloring with at most `precolor_cap` precolored edges per vertex,
/// lists of 1..list_cap colors (never all d, never the edge's precolor).
Instance gen_random_instance(int d, int precolor_cap, int list_cap, std::uint64_t seed,
                             const RandomOptions& options = {});

struct MatchingOptions {
    int separation = 3;
    int max_edges = 0;  // 0: a size that fits comfortably at this d
};

/// Constrained edges forming a distance-`separation` matching; each carries a
/// precolor, a list of at most d-1 colors, or both.
Instance gen_matching_instance(int d, std::uint64_t seed, const MatchingOptions& options = {});

}  // namespace cubext
