#include "cubext/tswap.hpp"

#include <algorithm>
#include <cmath>

namespace cubext {

namespace {

// Copy-on-write view of a coloring for dry runs.
class Scratch {
public:
    explicit Scratch(const TotalColoring& h) : h_(&h) {}

    Color get(EdgeRef e) const {
        const auto i = edge_index(h_->dim(), e);
        for (const auto& [idx, c] : patch_) {
            if (idx == i) return c;
        }
        return h_->get(e);
    }
    void set(EdgeRef e, Color c) {
        const auto i = edge_index(h_->dim(), e);
        for (auto& [idx, old] : patch_) {
            if (idx == i) {
                old = c;
                return;
            }
        }
        patch_.emplace_back(i, c);
    }

    bool swap(const FourCycle& cyc, PlannedSwap& out) {
        const auto e = cycle_edges(cyc);
        const Color a = get(e[0]);
        const Color b = get(e[1]);
        if (a == b || get(e[2]) != a || get(e[3]) != b) return false;
        out = {cyc, a, b};
        set(e[0], b);
        set(e[2], b);
        set(e[1], a);
        set(e[3], a);
        return true;
    }

private:
    const TotalColoring* h_;
    std::vector<std::pair<std::size_t, Color>> patch_;
};

struct Gadget {
    bool pre_swap = false;
    Color pre_color = kNoColor;
    Vertex x2 = kNoVertex;  // far copy of x
    Vertex y2 = kNoVertex;  // far copy of y
    Dim dim = -1;
};

struct Search {
    const TSwapState& state;
    const TotalColoring& h;
    const PartialColoring& phi;
    const ListAssignment& lists;
    const ParamSet& params;
    EdgeRef target;

    bool blocked(EdgeRef f) const {
        return phi.has(f) || is_requested(h, phi, f) || state.used(f);
    }

    // Make edge xy (dimension `dim`) carry `need` before the main swaps,
    // directly or through a pre-swap on a 2-colored cycle next to it.
    bool gadget(Vertex x, Vertex y, Dim dim, Color need, Gadget& g) const {
        const EdgeRef f = edge_from(x, dim);
        const Color cur = h.get(f);
        const SwapPlan& s = state.s_plan();
        if (cur == need) {
            g = {};
            return !s.used(f) && !blocked(f);
        }
        if (s.used(f)) return false;
        EdgeRef xx;
        if (!h.edge_with_color(x, need, xx)) return false;
        const Dim m = xx.dim;
        const Vertex x2 = x ^ bit(m);
        const Vertex y2 = y ^ bit(m);
        const EdgeRef yy = edge_from(y, m);
        const EdgeRef far = edge_from(x2, dim);
        if (h.get(yy) != need || h.get(far) != cur) return false;
        for (EdgeRef q : {f, xx, yy, far}) {
            if (s.used(q) || blocked(q)) return false;
        }
        if (lists.forbids(xx, cur) || lists.forbids(yy, cur) || lists.forbids(f, need) ||
            lists.forbids(far, need)) {
            return false;
        }
        if (state.vertex_overloaded(x2, params) || state.vertex_overloaded(y2, params) ||
            state.matching_overloaded(target, m, params)) {
            return false;
        }
        g = {true, cur, x2, y2, m};
        return true;
    }

    // 0 when spoke k works, else the first failing condition.
    int attempt(Dim k, TConfig& cfg) const {
        auto& v = cfg.v;
        for (int i = 1; i <= 4; ++i) v[i + 4] = v[i] ^ bit(k);
        for (int i = 9; i <= 14; ++i) v[i] = kNoVertex;
        cfg.spoke = k;

        for (int i = 5; i <= 8; ++i) {
            if (state.vertex_overloaded(v[i], params)) return 1;
        }
        if (state.matching_overloaded(target, k, params)) return 1;

        const std::array<EdgeRef, 4> spokes = {edge_from(v[1], k), edge_from(v[2], k),
                                               edge_from(v[3], k), edge_from(v[4], k)};
        const EdgeRef e12 = edge_from(v[1], std::countr_zero(v[1] ^ v[2]));
        const EdgeRef e34 = edge_from(v[3], std::countr_zero(v[3] ^ v[4]));
        for (EdgeRef s : spokes) {
            if (blocked(s)) return 2;
        }
        for (EdgeRef c : {e12, target, e34}) {
            if (state.used(c)) return 2;
        }
        if (phi.has(e12) || phi.has(e34)) return 2;

        const Color c3 = h.get(spokes[0]);
        for (EdgeRef s : spokes) {
            if (state.s_plan().used(s) || h.get(s) != c3) return 3;
        }
        cfg.c3 = c3;

        const Dim a = target.dim;
        const Dim b = e12.dim;
        const Dim b2 = e34.dim;
        const EdgeRef e56 = edge_from(v[5], b);
        const EdgeRef e67 = edge_from(v[6], a);
        const EdgeRef e78 = edge_from(v[7], b2);
        for (EdgeRef q : {e12, e34, e56, e78}) {
            if (lists.forbids(q, c3)) return 4;
        }
        if (lists.forbids(e67, cfg.c2)) return 4;

        if (lists.forbids(spokes[0], cfg.c2) || lists.forbids(spokes[3], cfg.c2)) return 5;
        if (lists.forbids(spokes[1], cfg.c1) || lists.forbids(spokes[2], cfg.c1)) return 6;

        // (7) v5v6, (8) v7v8, (9) v6v7
        std::array<Gadget, 3> g{};
        std::vector<EdgeRef> taken = {e12, target, e34, e56, e67, e78};
        taken.insert(taken.end(), spokes.begin(), spokes.end());
        auto fits = [&](const Gadget& gg, Vertex x, Vertex y, Dim dim) {
            if (!gg.pre_swap) return true;
            for (EdgeRef q : {edge_from(x, gg.dim), edge_from(y, gg.dim),
                              edge_from(gg.x2, dim)}) {
                if (std::find(taken.begin(), taken.end(), q) != taken.end()) return false;
                taken.push_back(q);
            }
            return true;
        };
        if (!gadget(v[5], v[6], b, cfg.c2, g[kGadget56]) ||
            !fits(g[kGadget56], v[5], v[6], b)) {
            return 7;
        }
        if (!gadget(v[7], v[8], b2, cfg.c2, g[kGadget78]) ||
            !fits(g[kGadget78], v[7], v[8], b2)) {
            return 8;
        }
        if (!gadget(v[6], v[7], a, cfg.c1, g[kGadget67]) ||
            !fits(g[kGadget67], v[6], v[7], a)) {
            return 9;
        }
        v[9] = g[kGadget56].x2;
        v[10] = g[kGadget56].y2;
        v[11] = g[kGadget67].x2;
        v[12] = g[kGadget67].y2;
        v[13] = g[kGadget78].x2;
        v[14] = g[kGadget78].y2;
        for (int s = 0; s < 3; ++s) {
            cfg.pre_swap[s] = g[s].pre_swap;
            cfg.pre_color[s] = g[s].pre_color;
        }

        Scratch sim(h);
        cfg.swaps.clear();
        auto run = [&](const FourCycle& cyc) {
            PlannedSwap p;
            if (!sim.swap(cyc, p)) return false;
            cfg.swaps.push_back(p);
            return true;
        };
        const std::array<std::pair<Vertex, Dim>, 3> base = {
            std::pair{v[5], b}, std::pair{v[6], a}, std::pair{v[7], b2}};
        for (int s : {kGadget56, kGadget67, kGadget78}) {
            if (cfg.pre_swap[s] && !run(cycle_at(base[s].first, base[s].second, g[s].dim))) {
                return kCondReplay;
            }
        }
        if (!run(cycle_at(v[1], b, k)) || !run(cycle_at(v[3], b2, k)) ||
            !run(cycle_at(v[2], a, k))) {
            return kCondReplay;
        }
        if (sim.get(target) != cfg.c2) return kCondReplay;
        for (const auto& p : cfg.swaps) {
            for (EdgeRef q : cycle_edges(p.cycle)) {
                const Color c = sim.get(q);
                if (lists.forbids(q, c)) return kCondReplay;
                if (q != target && phi.has(q)) return kCondReplay;
            }
        }
        return 0;
    }
};

}  // namespace

std::vector<EdgeRef> TConfig::edges() const {
    std::vector<EdgeRef> out;
    for (const auto& s : swaps) {
        for (EdgeRef e : cycle_edges(s.cycle)) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TSwapState::TSwapState(int d, const SwapPlan& s_plan)
    : d_(d), s_plan_(&s_plan), used_(edge_count(d), 0), used_at_(vertex_count(d), 0) {}

bool TSwapState::vertex_overloaded(Vertex v, const ParamSet& params) const {
    return reaches(used_at_[v], params.epsilon, d_);
}

bool TSwapState::matching_overloaded(EdgeRef center, Dim j, const ParamSet& params) const {
    return reaches(count_near(center, params.radii.swap_overload, used_by_dim_, j),
                   params.epsilon, d_);
}

void TSwapState::add(const TConfig& cfg) {
    for (EdgeRef e : cfg.edges()) {
        auto& flag = used_[edge_index(d_, e)];
        if (flag) continue;
        flag = 1;
        ++used_at_[e.base];
        ++used_at_[e.base ^ bit(e.dim)];
        used_by_dim_.push_back({e, e.dim});
    }
}

bool is_requested(const TotalColoring& h, const PartialColoring& phi, EdgeRef e) {
    const Color c = h.get(e);
    for (Vertex end : {e.base, e.base ^ bit(e.dim)}) {
        for (Dim i = 0; i < h.dim(); ++i) {
            if (i != e.dim && phi.get(edge_from(end, i)) == c) return true;
        }
    }
    return false;
}

TConfigOutcome build_t_config(EdgeRef e, const TSwapState& state, const TotalColoring& h,
                              const PartialColoring& phi_prime,
                              const ListAssignment& lists, const ParamSet& params,
                              const std::vector<Color>& matching_color) {
    const int d = h.dim();
    check_edge(d, e);
    TConfig cfg;
    cfg.target = e;
    cfg.c1 = h.get(e);
    cfg.c2 = phi_prime.get(e);
    if (cfg.c2 == kNoColor || cfg.c1 == cfg.c2) {
        throw Error(ErrorKind::InvalidConfig, describe(e) + " needs no configuration");
    }
    cfg.v.fill(kNoVertex);
    cfg.v[2] = e.base;
    cfg.v[3] = e.base ^ bit(e.dim);
    EdgeRef e12, e34;
    if (!h.edge_with_color(cfg.v[2], cfg.c2, e12) ||
        !h.edge_with_color(cfg.v[3], cfg.c2, e34)) {
        throw Error(ErrorKind::InvalidConfig, "coloring is not total");
    }
    cfg.v[1] = other_end(e12, cfg.v[2]);
    cfg.v[4] = other_end(e34, cfg.v[3]);

    const Search search{state, h, phi_prime, lists, params, e};
    int deepest = 1;
    for (Dim k = 0; k < d; ++k) {
        if (k == e.dim || k == e12.dim || k == e34.dim) continue;
        const int failed = search.attempt(k, cfg);
        if (failed == 0) {
            if (!matching_color.empty()) {
                cfg.matching_color = {matching_color[e12.dim], matching_color[e.dim],
                                      matching_color[e34.dim]};
            }
            return cfg;
        }
        deepest = std::max(deepest, failed);
    }
    return NoConfig{e, deepest};
}

void execute_t_config(TotalColoring& h, const TConfig& cfg, bool check_each) {
    for (const auto& s : cfg.swaps) {
        execute_swap(h, s);
        if (check_each && !proper_around(h, s.cycle)) {
            throw Error(ErrorKind::InvalidConfig,
                        describe(s.cycle) + " broke properness");
        }
    }
}

BoundReport tswap_report(const TotalColoring& h_final, const PartialColoring& phi_prime,
                         const ListAssignment& lists, const std::vector<TConfig>& configs,
                         const ParamSet& params) {
    const int d = h_final.dim();
    const std::size_t cap = static_cast<std::size_t>(params.report_cap);
    const double base = 3 * params.mu() + 3 * params.alpha_prime() + params.epsilon;
    const long vertex_limit = static_cast<long>(std::floor(base * d + 4 + 1e-9));
    const long matching_limit = static_cast<long>(std::floor(base * d + 3 + 1e-9));
    BoundReport report;

    auto disjoint = predicate_check(kStep4Disjoint, cap);
    std::vector<std::pair<std::size_t, std::size_t>> owner;
    std::vector<KeyedEdge> touched;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        for (EdgeRef e : configs[i].edges()) {
            owner.emplace_back(edge_index(d, e), i);
            touched.push_back({e, e.dim});
        }
    }
    std::sort(owner.begin(), owner.end());
    for (std::size_t i = 1; i < owner.size(); ++i) {
        if (owner[i].first == owner[i - 1].first) {
            disjoint.require(false, [&] { return describe(edge_at(d, owner[i].first)); });
        }
    }
    if (!disjoint.observed_any) disjoint.require(true, [] { return std::string{}; });

    auto per_vertex = BoundCheck::at_most(kStep4Vertex, vertex_limit, cap);
    count_per_vertex(d, touched, per_vertex);
    auto per_matching = BoundCheck::at_most(kStep4Matching, matching_limit, cap);
    count_per_neighborhood(d, params.radii.tswap_post, touched, d, per_matching, dim_label);

    auto proper = predicate_check(kStep4Proper, cap);
    proper.require(is_proper(h_final), [] { return std::string("some vertex"); });
    auto extends = predicate_check(kStep4Extends, cap);
    for (EdgeRef e : phi_prime.edges()) {
        extends.require(h_final.get(e) == phi_prime.get(e), [&] { return describe(e); });
    }
    if (!extends.observed_any) extends.require(true, [] { return std::string{}; });
    auto avoids = predicate_check(kStep4Avoids, cap);
    for (EdgeRef e : conflict_edges(h_final, lists)) {
        avoids.require(false, [&] { return describe(e); });
    }
    if (!avoids.observed_any) avoids.require(true, [] { return std::string{}; });

    report.checks = {std::move(disjoint), std::move(per_vertex), std::move(per_matching),
                     std::move(proper), std::move(extends), std::move(avoids)};
    return report;
}

TSwapOutcome complete_extension(const TotalColoring& h, const PartialColoring& phi_prime,
                                const ListAssignment& lists, const SwapPlan& s_plan,
                                const ParamSet& params, bool check_each) {
    const int d = h.dim();
    TSwapState state(d, s_plan);
    TotalColoring cur = h;
    const auto dominant = matching_colors(h);
    std::vector<TConfig> configs;
    std::vector<NoConfig> stuck;
    for (EdgeRef e : phi_prime.edges()) {
        if (cur.get(e) == phi_prime.get(e)) continue;
        auto built = build_t_config(e, state, cur, phi_prime, lists, params, dominant);
        if (auto* nc = std::get_if<NoConfig>(&built)) {
            stuck.push_back(*nc);
            continue;
        }
        auto& cfg = std::get<TConfig>(built);
        execute_t_config(cur, cfg, check_each);
        state.add(cfg);
        configs.push_back(std::move(cfg));
    }
    if (!stuck.empty()) return TSwapFailed{std::move(stuck), std::move(configs)};
    BoundReport report = tswap_report(cur, phi_prime, lists, configs, params);
    return TSwapResult{std::move(cur), std::move(configs), std::move(report)};
}

}  // namespace cubext
