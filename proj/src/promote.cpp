#include "cubext/promote.hpp"

#include <bit>

namespace cubext {

PromotionState::PromotionState(const TotalColoring& h, const PartialColoring& phi)
    : h_(&h), phi_(phi), requested_at_(vertex_count(h.dim()), 0) {
    if (h.dim() != phi.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "coloring and precoloring differ in d");
    }
    const int d = h.dim();
    mult_ = cubext::request_multiplicity(h, phi);
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (mult_[i] > 0) {
            const EdgeRef e = edge_at(d, i);
            ++requested_at_[e.base];
            ++requested_at_[e.base ^ bit(e.dim)];
        }
    }
    for (EdgeRef e : phi.edges()) by_color_.push_back({e, phi.get(e)});
}

bool PromotionState::vertex_overloaded(Vertex v, const ParamSet& params) const {
    return reaches(requested_at_[v], params.epsilon0, phi_.dim());
}

bool PromotionState::color_overloaded(EdgeRef e, Color c, const ParamSet& params) const {
    const long n = count_near(e, params.radii.color_overload, by_color_, c);
    return reaches(n, params.epsilon0, phi_.dim());
}

void PromotionState::promote(EdgeRef e, Color c) {
    const int d = phi_.dim();
    phi_.set(e, c);
    by_color_.push_back({e, c});
    promoted_.emplace_back(e, c);
    for (Vertex end : {e.base, e.base ^ bit(e.dim)}) {
        EdgeRef hit;
        if (h_->edge_with_color(end, c, hit) && hit != e) {
            if (mult_[edge_index(d, hit)]++ == 0) {
                ++requested_at_[hit.base];
                ++requested_at_[hit.base ^ bit(hit.dim)];
            }
        }
    }
}

ColorMask allowed_list(EdgeRef e, const PromotionState& state, const TotalColoring& h,
                       const ListAssignment& lists, const ParamSet& params) {
    const int d = h.dim();
    const PartialColoring& phi = state.precoloring();
    ColorMask allowed = full_mask(d) & ~lists.mask(e);

    for (Vertex end : {e.base, e.base ^ bit(e.dim)}) {
        for (Dim i = 0; i < d; ++i) {
            if (i == e.dim) continue;
            const EdgeRef f = edge_from(end, i);
            const Color pc = phi.get(f);
            if (pc != kNoColor) allowed &= ~color_bit(pc);
            if (state.vertex_overloaded(end ^ bit(i), params)) {
                allowed &= ~color_bit(h.get(f));
            }
        }
    }
    for (Color c = 0; c < d; ++c) {
        if ((allowed & color_bit(c)) && state.color_overloaded(e, c, params)) {
            allowed &= ~color_bit(c);
        }
    }
    return allowed;
}

PromotionOutcome promote_conflicts(const TotalColoring& h, const PartialColoring& phi,
                                   const ListAssignment& lists, const ParamSet& params) {
    PromotionState state(h, phi);
    for (EdgeRef e : conflict_edges(h, lists)) {
        if (phi.has(e)) continue;  // already prescribed, outside its list
        const ColorMask allowed = allowed_list(e, state, h, lists, params);
        if (allowed == 0) return PromotionFailed{e, 0, state.promoted()};
        state.promote(e, static_cast<Color>(std::countr_zero(allowed)));
    }
    Promotion out{state.precoloring(), state.promoted(), {}};
    out.report = promotion_report(h, phi, out.phi_prime, lists, params);
    return out;
}

BoundReport promotion_report(const TotalColoring& h, const PartialColoring& phi,
                             const PartialColoring& phi_prime,
                             const ListAssignment& lists, const ParamSet& params) {
    const int d = h.dim();
    const std::size_t cap = static_cast<std::size_t>(params.report_cap);
    const long alpha_limit = bound_floor(params.alpha_prime(), d);
    const long kappa_limit = bound_floor(params.kappa, d);
    BoundReport report;

    auto a = predicate_check(kStep2A, cap);
    for (EdgeRef e : phi.edges()) {
        a.require(phi_prime.get(e) == phi.get(e), [&] { return describe(e); });
    }
    if (!a.observed_any) a.require(true, [] { return std::string{}; });

    auto b = predicate_check(kStep2B, cap);
    for (EdgeRef e : conflict_edges(h, lists)) {
        const Color c = phi_prime.get(e);
        b.require(c != kNoColor && !lists.forbids(e, c), [&] { return describe(e); });
    }
    if (!b.observed_any) b.require(true, [] { return std::string{}; });

    std::vector<KeyedEdge> plain, by_color, by_dim;
    for (EdgeRef e : phi_prime.edges()) {
        plain.push_back({e, 0});
        by_color.push_back({e, phi_prime.get(e)});
        by_dim.push_back({e, e.dim});
    }
    auto c = BoundCheck::at_most(kStep2C, alpha_limit, cap);
    count_per_vertex(d, plain, c);
    auto dd = BoundCheck::at_most(kStep2D, alpha_limit, cap);
    count_per_neighborhood(d, params.radii.promote_density, by_color, d, dd, color_label);
    auto e = BoundCheck::at_most(kStep2E, alpha_limit, cap);
    count_per_neighborhood(d, params.radii.promote_density, by_dim, d, e, dim_label);

    std::vector<KeyedEdge> requested;
    for (EdgeRef r : requested_edges(h, phi_prime)) requested.push_back({r, r.dim});
    auto f = BoundCheck::at_most(kStep2F, kappa_limit, cap);
    count_per_neighborhood(d, params.radii.promote_requested, requested, d, f, dim_label);
    auto g = BoundCheck::at_most(kStep2G, kappa_limit, cap);
    count_per_vertex(d, requested, g);

    auto proper = predicate_check(kStep2Proper, cap);
    proper.require(is_proper(phi_prime), [] { return std::string("some vertex"); });

    report.checks = {std::move(a), std::move(b), std::move(c), std::move(dd),
                     std::move(e), std::move(f), std::move(g), std::move(proper)};
    return report;
}

}  // namespace cubext
