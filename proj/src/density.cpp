#include "cubext/density.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace cubext {

std::string color_label(int c) { return "color " + std::to_string(c + 1); }
std::string dim_label(int i) { return "matching dim" + std::to_string(i); }

void count_per_vertex(int d, std::span<const KeyedEdge> marked, BoundCheck& check,
                      const KeyLabel& label) {
    (void)d;
    std::vector<std::pair<Vertex, int>> hits;
    hits.reserve(marked.size() * 2);
    for (const auto& m : marked) {
        hits.emplace_back(m.edge.base, m.key);
        hits.emplace_back(m.edge.base ^ bit(m.edge.dim), m.key);
    }
    std::sort(hits.begin(), hits.end());
    if (hits.empty()) {
        check.observe(0, [] { return std::string("no marked edges"); });
        return;
    }
    for (std::size_t i = 0; i < hits.size();) {
        std::size_t j = i;
        while (j < hits.size() && hits[j] == hits[i]) ++j;
        const auto [v, key] = hits[i];
        check.observe(static_cast<long>(j - i), [&, v = v, key = key] {
            std::string w = "vertex " + std::to_string(v);
            if (label) w += ", " + label(key);
            return w;
        });
        if (check.done()) return;
        i = j;
    }
}

void count_per_neighborhood(int d, int radius, std::span<const KeyedEdge> marked,
                            int num_keys, BoundCheck& check, const KeyLabel& label) {
    if (marked.empty()) {
        check.observe(0, [] { return std::string("no marked edges"); });
        return;
    }
    if (neighborhood_saturates(d, radius)) {
        std::vector<long> counts(num_keys, 0);
        for (const auto& m : marked) ++counts[m.key];
        for (int k = 0; k < num_keys; ++k) {
            if (counts[k] == 0) continue;
            check.observe(counts[k], [&] {
                std::string w = "every " + std::to_string(radius) + "-neighborhood";
                if (label) w += ", " + label(k);
                return w;
            });
        }
        return;
    }

    std::vector<long> counts(num_keys, 0);
    std::vector<int> touched;
    for (std::size_t idx = 0; idx < edge_count(d); ++idx) {
        const EdgeRef center = edge_at(d, idx);
        touched.clear();
        for (const auto& m : marked) {
            if (edge_distance_unchecked(center, m.edge) <= radius) {
                if (counts[m.key]++ == 0) touched.push_back(m.key);
            }
        }
        std::sort(touched.begin(), touched.end());
        for (int k : touched) {
            check.observe(counts[k], [&] {
                std::string w = std::to_string(radius) + "-neighborhood of " +
                                describe(center);
                if (label) w += ", " + label(k);
                return w;
            });
            counts[k] = 0;
        }
        if (check.done()) return;
    }
    if (!check.observed_any) {
        check.observe(0, [] { return std::string("no marked edges"); });
    }
}

long count_near(EdgeRef center, int radius, std::span<const KeyedEdge> marked,
                int key) {
    long n = 0;
    for (const auto& m : marked) {
        if (m.key == key && edge_distance_unchecked(center, m.edge) <= radius) ++n;
    }
    return n;
}

BoundReport check_alpha_dense(const PartialColoring& phi, double alpha, int radius,
                              std::size_t cap) {
    const int d = phi.dim();
    const long limit = bound_floor(alpha, d);
    std::vector<KeyedEdge> by_color;
    std::vector<KeyedEdge> by_dim;
    std::vector<KeyedEdge> plain;
    for (EdgeRef e : phi.edges()) {
        by_color.push_back({e, phi.get(e)});
        by_dim.push_back({e, e.dim});
        plain.push_back({e, 0});
    }

    BoundReport report;
    auto per_vertex = BoundCheck::at_most("(i) precolored edges per vertex", limit, cap);
    count_per_vertex(d, plain, per_vertex);
    auto per_color = BoundCheck::at_most(
        "(ii) precolored edges per color per neighborhood", limit, cap);
    count_per_neighborhood(d, radius, by_color, d, per_color, color_label);
    auto per_matching = BoundCheck::at_most(
        "(iii) precolored edges per matching per neighborhood", limit, cap);
    count_per_neighborhood(d, radius, by_dim, d, per_matching, dim_label);
    report.checks = {std::move(per_vertex), std::move(per_color),
                     std::move(per_matching)};
    return report;
}

BoundReport check_beta_sparse(const ListAssignment& lists, double beta, int radius,
                              std::size_t cap) {
    const int d = lists.dim();
    const long limit = bound_floor(beta, d);

    BoundReport report;
    auto size = BoundCheck::at_most("(i) list size per edge", limit, cap);
    std::vector<KeyedEdge> by_color;
    std::vector<KeyedEdge> by_dim_color;
    for (EdgeRef e : lists.edges()) {
        const ColorMask m = lists.mask(e);
        size.observe(std::popcount(m), [&] { return describe(e); });
        for (Color c = 0; c < d; ++c) {
            if (m & color_bit(c)) {
                by_color.push_back({e, c});
                by_dim_color.push_back({e, e.dim * d + c});
            }
        }
    }
    if (!size.observed_any) size.observe(0, [] { return std::string("no lists"); });

    auto per_vertex = BoundCheck::at_most("(ii) color occurrences in lists per vertex",
                                          limit, cap);
    count_per_vertex(d, by_color, per_vertex, color_label);
    auto per_matching = BoundCheck::at_most(
        "(iii) color occurrences in lists per matching per neighborhood", limit, cap);
    count_per_neighborhood(d, radius, by_dim_color, d * d, per_matching, [d](int k) {
        return dim_label(k / d) + ", " + color_label(k % d);
    });
    report.checks = {std::move(size), std::move(per_vertex), std::move(per_matching)};
    return report;
}

double DensityProfile::alpha(int d) const {
    return static_cast<double>(std::max({precolored_per_vertex,
                                         precolored_color_per_neighborhood,
                                         precolored_matching_per_neighborhood})) /
           d;
}

double DensityProfile::beta(int d) const {
    return static_cast<double>(std::max(
               {list_size, list_color_per_vertex, list_color_matching_per_neighborhood})) /
           d;
}

DensityProfile measure_density(const Instance& inst, int radius) {
    // Limits of zero only serve to collect the worst counts.
    const auto a = check_alpha_dense(inst.precoloring, 0.0, radius, 0);
    const auto b = check_beta_sparse(inst.lists, 0.0, radius, 0);
    DensityProfile p;
    p.precolored_per_vertex = a.checks[0].worst;
    p.precolored_color_per_neighborhood = a.checks[1].worst;
    p.precolored_matching_per_neighborhood = a.checks[2].worst;
    p.list_size = b.checks[0].worst;
    p.list_color_per_vertex = b.checks[1].worst;
    p.list_color_matching_per_neighborhood = b.checks[2].worst;
    return p;
}

}  // namespace cubext
