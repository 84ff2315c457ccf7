#pragma once

// Local counting over vertices and edge neighborhoods, and the density
// validators for precolorings and list assignments built from it.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cubext/coloring.hpp"
#include "cubext/report.hpp"

namespace cubext {

struct KeyedEdge {
    EdgeRef edge;
    int key = 0;
};

using KeyLabel = std::function<std::string(int)>;

/// For every (vertex, key), counts marked edges incident to the vertex and
/// feeds the count into `check`.
void count_per_vertex(int d, std::span<const KeyedEdge> marked, BoundCheck& check,
                      const KeyLabel& label = {});

/// For every center edge and key, counts marked edges of that key within
/// edge distance `radius` of the center. Once the radius covers the whole
/// cube a single global count per key is reported.
void count_per_neighborhood(int d, int radius, std::span<const KeyedEdge> marked,
                            int num_keys, BoundCheck& check,
                            const KeyLabel& label = {});

/// Count of marked edges within `radius` of `center` (single window).
long count_near(EdgeRef center, int radius, std::span<const KeyedEdge> marked,
                int key);

std::string color_label(int c);
std::string dim_label(int i);

/// Precolored edges per vertex (i), per color in every radius-neighborhood
/// (ii), per dimensional matching in every radius-neighborhood (iii).
BoundReport check_alpha_dense(const PartialColoring& phi, double alpha, int radius,
                              std::size_t cap = 16);

/// List size per edge (i), occurrences of a color in lists at a vertex (ii),
/// occurrences of a color in lists of one matching inside every
/// radius-neighborhood (iii).
BoundReport check_beta_sparse(const ListAssignment& lists, double beta, int radius,
                              std::size_t cap = 16);

/// Largest counts of each density clause, for reporting generated instances.
struct DensityProfile {
    long precolored_per_vertex = 0;
    long precolored_color_per_neighborhood = 0;
    long precolored_matching_per_neighborhood = 0;
    long list_size = 0;
    long list_color_per_vertex = 0;
    long list_color_matching_per_neighborhood = 0;

    double alpha(int d) const;
    double beta(int d) const;
};

DensityProfile measure_density(const Instance& inst, int radius);

}  // namespace cubext
