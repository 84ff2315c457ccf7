#include "cubext/fastpath.hpp"

#include <bit>

namespace cubext {

namespace {

bool separated(EdgeRef x, EdgeRef y, int t) {
    if (x == y) return false;
    const int dist = edge_distance_unchecked(x, y);
    if (dist < t) return false;
    if (dist > 0) return true;
    const Vertex a = x.base, b = a ^ bit(x.dim);
    const Vertex c = y.base, e = c ^ bit(y.dim);
    return a != c && a != e && b != c && b != e;
}

bool find_close_pair(const std::vector<EdgeRef>& edges, int t, EdgeRef& x, EdgeRef& y) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (!separated(edges[i], edges[j], t)) {
                x = edges[i];
                y = edges[j];
                return true;
            }
        }
    }
    return false;
}

}  // namespace

bool is_distance_t_matching(int d, const std::vector<EdgeRef>& edges, int t) {
    for (EdgeRef e : edges) check_edge(d, e);
    EdgeRef x, y;
    return !find_close_pair(edges, t, x, y);
}

FastpathOutcome solve_matching_instance(const Instance& inst) {
    const int d = inst.d;
    const int t = inst.params.fastpath_distance;
    const auto constrained = inst.constrained_edges();
    if (!is_distance_t_matching(d, constrained, t)) {
        FastpathInapplicable out;
        find_close_pair(constrained, t, out.first, out.second);
        return out;
    }

    TotalColoring h = standard_coloring(d);
    PartialColoring phi_prime = inst.precoloring;
    for (EdgeRef e : conflict_edges(h, inst.lists)) {
        if (phi_prime.has(e)) continue;
        const ColorMask free = full_mask(d) & ~inst.lists.mask(e);
        if (free == 0) return FastpathFailed{e};
        phi_prime.set(e, static_cast<Color>(std::countr_zero(free)));
    }

    std::vector<PlannedSwap> swaps;
    for (EdgeRef e : phi_prime.edges()) {
        const Color c = phi_prime.get(e);
        if (h.get(e) == c) continue;
        const FourCycle cyc = cycle_at(e.base, e.dim, c);
        if (!is_two_colored(h, cyc)) return FastpathFailed{e};
        const PlannedSwap s = plan_swap(h, cyc);
        execute_swap(h, s);
        swaps.push_back(s);
    }

    BoundReport report = verify_solution(inst, h, static_cast<std::size_t>(inst.params.report_cap));
    if (!report.pass()) {
        // only reachable below distance 3
        EdgeRef e = constrained.empty() ? EdgeRef{} : constrained.front();
        return FastpathFailed{e};
    }
    return FastpathSolved{std::move(h), std::move(phi_prime), std::move(swaps),
                          std::move(report)};
}

}  // namespace cubext
