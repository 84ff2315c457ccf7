#include "cubext/pipeline.hpp"

#include <algorithm>

namespace cubext {

const char* to_string(Mode m) {
    switch (m) {
    case Mode::Auto: return "auto";
    case Mode::Staged: return "staged";
    case Mode::Fastpath: return "fastpath";
    case Mode::Oracle: return "oracle";
    }
    return "auto";
}

const char* to_string(Step s) {
    switch (s) {
    case Step::Fastpath: return "fastpath";
    case Step::Permute: return "permute";
    case Step::Promote: return "promote";
    case Step::SSwap: return "sswap";
    case Step::TSwap: return "tswap";
    case Step::Oracle: return "oracle";
    case Step::Verify: return "verify";
    }
    return "verify";
}

Mode parse_mode(const std::string& s) {
    for (Mode m : {Mode::Auto, Mode::Staged, Mode::Fastpath, Mode::Oracle}) {
        if (s == to_string(m)) return m;
    }
    throw Error(ErrorKind::InvalidInput, "unknown mode '" + s + "'");
}

namespace {

std::string failed_names(const BoundReport& r) {
    std::string out;
    for (const auto& n : r.failed()) {
        if (!out.empty()) out += "; ";
        out += n;
    }
    return out;
}

SolveOutcome finish(const Instance& inst, Trace trace, std::vector<NamedReport> reports) {
    BoundReport final_report =
        verify_solution(inst, trace.coloring, static_cast<std::size_t>(inst.params.report_cap));
    if (!final_report.pass()) {
        Failure f{Step::Verify, "final coloring failed: " + failed_names(final_report), {}};
        reports.emplace_back("verify", std::move(final_report));
        f.reports = std::move(reports);
        return f;
    }
    reports.emplace_back("verify", std::move(final_report));
    TotalColoring c = trace.coloring;
    return Success{std::move(c), std::move(trace), std::move(reports)};
}

SolveOutcome run_fastpath(const Instance& inst) {
    auto out = solve_matching_instance(inst);
    if (auto* bad = std::get_if<FastpathInapplicable>(&out)) {
        return Failure{Step::Fastpath,
                       "constrained edges " + describe(bad->first) + " and " +
                           describe(bad->second) + " are too close",
                       {}};
    }
    if (auto* bad = std::get_if<FastpathFailed>(&out)) {
        return Failure{Step::Fastpath, "no usable color for " + describe(bad->edge), {}};
    }
    auto& ok = std::get<FastpathSolved>(out);
    Trace trace;
    trace.route = Mode::Fastpath;
    trace.instance = inst;
    trace.fast_swaps = std::move(ok.swaps);
    trace.coloring = std::move(ok.coloring);
    return finish(inst, std::move(trace), {});
}

SolveOutcome run_oracle(const Instance& inst, std::uint64_t budget) {
    auto v = exact_solve(inst, budget);
    if (auto* f = std::get_if<Feasible>(&v)) {
        Trace trace;
        trace.route = Mode::Oracle;
        trace.instance = inst;
        trace.coloring = std::move(f->coloring);
        return finish(inst, std::move(trace), {});
    }
    if (auto* n = std::get_if<Infeasible>(&v)) {
        Failure f{Step::Oracle,
                  "no extension exists (" + std::to_string(n->nodes) + " nodes)", {}};
        f.infeasible = true;
        return f;
    }
    return Failure{Step::Oracle,
                   "node budget exhausted after " +
                       std::to_string(std::get<BudgetExceeded>(v).nodes) + " nodes",
                   {}};
}

SolveOutcome run_staged_once(const Instance& inst, int restart, bool check_each) {
    const ParamSet& params = inst.params;
    const TotalColoring h = standard_coloring(inst.d);
    std::vector<NamedReport> reports;

    auto p1 = find_permutation(h, inst.precoloring, inst.lists, params, restart);
    if (auto* none = std::get_if<NoPermutationFound>(&p1)) {
        reports.emplace_back("permute", none->best);
        return Failure{Step::Permute,
                       "no permutation within bounds after " + std::to_string(none->trials) +
                           " trials; best fails " + failed_names(none->best),
                       std::move(reports)};
    }
    auto& found = std::get<PermutationFound>(p1);
    reports.emplace_back("permute", found.report);
    if (!found.report.pass()) {
        return Failure{Step::Permute, failed_names(found.report), std::move(reports)};
    }

    auto p2 = promote_conflicts(found.coloring, inst.precoloring, inst.lists, params);
    if (auto* stuck = std::get_if<PromotionFailed>(&p2)) {
        return Failure{Step::Promote, "no allowed color for " + describe(stuck->edge),
                       std::move(reports)};
    }
    auto& promo = std::get<Promotion>(p2);
    reports.emplace_back("promote", promo.report);
    if (!promo.report.pass()) {
        return Failure{Step::Promote, failed_names(promo.report), std::move(reports)};
    }

    auto p3 = eliminate_unexpected(found.coloring, promo.phi_prime, inst.lists, params);
    if (auto* stuck = std::get_if<SSwapFailed>(&p3)) {
        return Failure{Step::SSwap, "no cycle for unexpected edge " + describe(stuck->edge),
                       std::move(reports)};
    }
    auto& s = std::get<SSwapResult>(p3);
    reports.emplace_back("sswap", s.report);
    if (!s.report.pass()) {
        return Failure{Step::SSwap, failed_names(s.report), std::move(reports)};
    }

    auto p4 = complete_extension(s.coloring, promo.phi_prime, inst.lists, s.plan, params,
                                 check_each);
    if (auto* stuck = std::get_if<TSwapFailed>(&p4)) {
        std::string why = "no configuration for";
        for (const auto& nc : stuck->stuck) {
            why += " " + describe(nc.edge) + " at condition " + std::to_string(nc.condition);
        }
        return Failure{Step::TSwap, why, std::move(reports)};
    }
    auto& t = std::get<TSwapResult>(p4);
    reports.emplace_back("tswap", t.report);
    if (!t.report.pass()) {
        return Failure{Step::TSwap, failed_names(t.report), std::move(reports)};
    }

    Trace trace;
    trace.route = Mode::Staged;
    trace.instance = inst;
    trace.restart = restart;
    trace.rho = found.rho;
    trace.promotions = promo.promoted;
    trace.s_unexpected = s.plan.unexpected();
    trace.s_swaps = s.plan.swaps();
    trace.t_configs = std::move(t.configs);
    trace.coloring = std::move(t.coloring);
    return finish(inst, std::move(trace), std::move(reports));
}

SolveOutcome run_staged(const Instance& inst, bool check_each) {
    const int restarts = std::max(1, inst.params.restarts);
    Failure deepest;
    bool have = false;
    for (int r = 0; r < restarts; ++r) {
        auto out = run_staged_once(inst, r, check_each);
        if (std::holds_alternative<Success>(out)) return out;
        auto& f = std::get<Failure>(out);
        if (!have || static_cast<int>(f.step) > static_cast<int>(deepest.step)) {
            deepest = std::move(f);
            have = true;
        }
    }
    deepest.restarts = restarts;
    return deepest;
}

}  // namespace

SolveOutcome solve(const Instance& inst, const SolveOptions& options) {
    check_dimension(inst.d);
    inst.params.validate();
    if (inst.precoloring.dim() != inst.d || inst.lists.dim() != inst.d) {
        throw Error(ErrorKind::DimensionMismatch, "instance parts disagree on d");
    }
    EdgeRef bad;
    if (inst.find_incompatible(bad)) {
        throw Error(ErrorKind::IncompatibleInstance,
                    describe(bad) + " is precolored with a color in its own list");
    }
    switch (options.mode) {
    case Mode::Fastpath: return run_fastpath(inst);
    case Mode::Oracle: return run_oracle(inst, options.oracle_budget);
    case Mode::Staged: return run_staged(inst, options.check_each_swap);
    case Mode::Auto: break;
    }
    if (is_distance_t_matching(inst.d, inst.constrained_edges(),
                               inst.params.fastpath_distance)) {
        return run_fastpath(inst);
    }
    return run_staged(inst, options.check_each_swap);
}

namespace {

[[noreturn]] void corrupt(const std::string& what) {
    throw Error(ErrorKind::CorruptTrace, what);
}

void replay_swap(TotalColoring& h, const PlannedSwap& s, bool check_each) {
    try {
        execute_swap(h, s);
    } catch (const Error& e) {
        corrupt(e.what());
    }
    if (check_each && !proper_around(h, s.cycle)) {
        corrupt(describe(s.cycle) + " broke properness");
    }
}

}  // namespace

TotalColoring replay(const Trace& trace, bool check_each_swap) {
    const Instance& inst = trace.instance;
    TotalColoring h;
    try {
        check_dimension(inst.d);
        h = standard_coloring(inst.d);
    } catch (const Error& e) {
        corrupt(e.what());
    }

    switch (trace.route) {
    case Mode::Fastpath:
        for (const auto& s : trace.fast_swaps) replay_swap(h, s, check_each_swap);
        break;
    case Mode::Oracle:
        if (trace.coloring.dim() != inst.d) corrupt("coloring has the wrong size");
        h = trace.coloring;
        break;
    case Mode::Staged: {
        if (trace.rho.dim() != inst.d) corrupt("permutation has the wrong size");
        h = permute_colors(h, trace.rho);
        PartialColoring phi_prime = inst.precoloring;
        for (const auto& [e, c] : trace.promotions) {
            try {
                check_edge(inst.d, e);
                if (phi_prime.has(e) || c >= inst.d || inst.lists.forbids(e, c)) {
                    corrupt("bad promotion of " + describe(e));
                }
                phi_prime.set(e, c);
            } catch (const Error& err) {
                corrupt(err.what());
            }
        }
        if (trace.s_unexpected != unexpected_edges(h, phi_prime) ||
            trace.s_swaps.size() != trace.s_unexpected.size()) {
            corrupt("swap plan does not cover the unexpected edges");
        }
        for (std::size_t i = 0; i < trace.s_swaps.size(); ++i) {
            const auto edges = cycle_edges(trace.s_swaps[i].cycle);
            if (std::find(edges.begin(), edges.end(), trace.s_unexpected[i]) == edges.end()) {
                corrupt(describe(trace.s_swaps[i].cycle) + " misses its unexpected edge");
            }
        }
        for (const auto& s : trace.s_swaps) replay_swap(h, s, check_each_swap);
        for (const auto& cfg : trace.t_configs) {
            for (const auto& s : cfg.swaps) replay_swap(h, s, check_each_swap);
            if (h.get(cfg.target) != phi_prime.get(cfg.target)) {
                corrupt("configuration for " + describe(cfg.target) + " misses its color");
            }
        }
        break;
    }
    case Mode::Auto:
        corrupt("trace has no route");
    }

    if (check_each_swap && !is_proper(h)) corrupt("final coloring is not proper");
    if (!verify_solution(inst, h).pass()) corrupt("replayed coloring fails verification");
    if (!(h == trace.coloring)) corrupt("replayed coloring differs from the recorded one");
    return h;
}

}  // namespace cubext
