#include "cubext/sswap.hpp"

#include <algorithm>
#include <cmath>

namespace cubext {

SwapPlan::SwapPlan(int d)
    : d_(d), used_(edge_count(d), 0), used_at_(vertex_count(d), 0) {}

bool SwapPlan::vertex_overloaded(Vertex v, const ParamSet& params) const {
    return reaches(used_at_[v], params.epsilon, d_);
}

bool SwapPlan::matching_overloaded(EdgeRef center, Dim j, const ParamSet& params) const {
    return reaches(count_near(center, params.radii.swap_overload, used_by_dim_, j),
                   params.epsilon, d_);
}

void SwapPlan::add(EdgeRef unexpected_edge, const PlannedSwap& s) {
    swaps_.push_back(s);
    handled_.push_back(unexpected_edge);
    for (EdgeRef e : cycle_edges(s.cycle)) {
        auto& flag = used_[edge_index(d_, e)];
        if (flag) continue;
        flag = 1;
        ++used_at_[e.base];
        ++used_at_[e.base ^ bit(e.dim)];
        used_by_dim_.push_back({e, e.dim});
    }
}

std::optional<FourCycle> select_cycle_for(EdgeRef e, const SwapPlan& plan,
                                          const TotalColoring& h,
                                          const PartialColoring& phi_prime,
                                          const std::vector<int>& request_mult,
                                          const ListAssignment& lists,
                                          const ParamSet& params) {
    const int d = h.dim();
    const Vertex u = e.base;
    const Vertex v = u ^ bit(e.dim);
    auto blocked = [&](EdgeRef f) {
        return phi_prime.has(f) || request_mult[edge_index(d, f)] > 0 || plan.used(f);
    };
    for (Dim j = 0; j < d; ++j) {
        if (j == e.dim) continue;
        const FourCycle cyc = cycle_at(u, e.dim, j);
        if (!is_two_colored(h, cyc) || !is_allowed_cycle(h, lists, cyc)) continue;

        const Vertex z = v ^ bit(j);
        const Vertex t = u ^ bit(j);
        if (plan.vertex_overloaded(z, params) || plan.vertex_overloaded(t, params) ||
            plan.matching_overloaded(e, j, params)) {
            continue;
        }
        if (blocked(edge_from(v, j)) || blocked(edge_from(t, e.dim)) ||
            blocked(edge_from(u, j))) {
            continue;
        }
        return cyc;
    }
    return std::nullopt;
}

SSwapOutcome eliminate_unexpected(const TotalColoring& h,
                                  const PartialColoring& phi_prime,
                                  const ListAssignment& lists, const ParamSet& params) {
    const auto mult = request_multiplicity(h, phi_prime);
    SwapPlan plan(h.dim());
    for (EdgeRef e : unexpected_edges(h, phi_prime)) {
        auto cyc = select_cycle_for(e, plan, h, phi_prime, mult, lists, params);
        if (!cyc) return SSwapFailed{e, std::move(plan)};
        plan.add(e, plan_swap(h, *cyc));
    }
    TotalColoring out = h;
    for (const auto& s : plan.swaps()) execute_swap(out, s);
    BoundReport report = sswap_report(h, out, phi_prime, plan, params);
    return SSwapResult{std::move(out), std::move(plan), std::move(report)};
}

BoundReport sswap_report(const TotalColoring& h_before, const TotalColoring& h_after,
                         const PartialColoring& phi_prime, const SwapPlan& plan,
                         const ParamSet& params) {
    const int d = h_after.dim();
    const std::size_t cap = static_cast<std::size_t>(params.report_cap);
    const long used_limit = static_cast<long>(
        std::floor((2 * params.kappa + params.epsilon) * d + 1 + 1e-9));
    const long mu_limit = bound_floor(params.mu(), d);
    BoundReport report;

    const auto mult = request_multiplicity(h_after, phi_prime);
    auto a = predicate_check(kStep3A, cap);
    auto b = predicate_check(kStep3B, cap);
    std::vector<KeyedEdge> requested;
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (mult[i] == 0) continue;
        const EdgeRef e = edge_at(d, i);
        requested.push_back({e, e.dim});
        if (phi_prime.at_index(i) != kNoColor) a.require(false, [&] { return describe(e); });
        if (mult[i] > 1) b.require(false, [&] { return describe(e); });
    }
    if (!a.observed_any) a.require(true, [] { return std::string{}; });
    if (!b.observed_any) b.require(true, [] { return std::string{}; });

    std::vector<KeyedEdge> used;
    std::vector<std::size_t> seen;
    for (const auto& s : plan.swaps()) {
        for (EdgeRef e : cycle_edges(s.cycle)) {
            used.push_back({e, e.dim});
            seen.push_back(edge_index(d, e));
        }
    }
    auto c = BoundCheck::at_most(kStep3C, used_limit, cap);
    count_per_vertex(d, used, c);
    auto dd = BoundCheck::at_most(kStep3D, used_limit, cap);
    count_per_neighborhood(d, params.radii.sswap_post, used, d, dd, dim_label);
    auto e = BoundCheck::at_most(kStep3E, mu_limit, cap);
    count_per_neighborhood(d, params.radii.sswap_post, requested, d, e, dim_label);
    auto f = BoundCheck::at_most(kStep3F, mu_limit, cap);
    count_per_vertex(d, requested, f);

    auto disjoint = predicate_check(kStep3Disjoint, cap);
    std::sort(seen.begin(), seen.end());
    const bool distinct = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    disjoint.require(distinct, [] { return std::string("two cycles share an edge"); });
    const auto before = unexpected_edges(h_before, phi_prime);
    for (const auto& s : plan.swaps()) {
        int hits = 0;
        for (EdgeRef x : cycle_edges(s.cycle)) {
            hits += std::binary_search(before.begin(), before.end(), x) ? 1 : 0;
        }
        disjoint.require(hits == 1, [&] { return describe(s.cycle); });
    }
    disjoint.require(plan.swaps().size() == before.size(),
                     [] { return std::string("unexpected edge left uncovered"); });

    report.checks = {std::move(a), std::move(b), std::move(c), std::move(dd),
                     std::move(e), std::move(f), std::move(disjoint)};
    return report;
}

}  // namespace cubext
