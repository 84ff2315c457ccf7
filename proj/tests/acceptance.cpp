// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "cubext/generators.hpp"
#include "cubext/json_io.hpp"
#include "cubext/oracle.hpp"
#include "cubext/pipeline.hpp"
#include "cubext/random.hpp"
#include "support.hpp"

using namespace cubext;
using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int n, const std::string& title, const std::function<Verdict()>& body) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!v.pass) ++failures;
    std::printf("criterion %d: %s  %s (%s; %.2f s)\n", n, v.pass ? "PASS" : "FAIL", title.c_str(),
                v.detail.c_str(), secs);
    std::fflush(stdout);
}

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Postconditions of every step, recomputed from the trace alone.
bool staged_postconditions(const Trace& t, std::string& why) {
    const Instance& inst = t.instance;
    ParamSet params = inst.params;
    const auto h = permute_colors(standard_coloring(inst.d), t.rho);
    auto r1 = evaluate_permutation(standard_coloring(inst.d), t.rho, inst.precoloring,
                                   inst.lists, params);
    if (!r1.pass()) {
        why = "step 1: " + r1.failed().front();
        return false;
    }
    PartialColoring phi_prime = inst.precoloring;
    for (const auto& [e, c] : t.promotions) phi_prime.set(e, c);
    auto r2 = promotion_report(h, inst.precoloring, phi_prime, inst.lists, params);
    if (!r2.pass()) {
        why = "step 2: " + r2.failed().front();
        return false;
    }
    auto h2 = h;
    SwapPlan plan(inst.d);
    for (std::size_t i = 0; i < t.s_swaps.size(); ++i) {
        execute_swap(h2, t.s_swaps[i]);
        plan.add(t.s_unexpected[i], t.s_swaps[i]);
    }
    auto r3 = sswap_report(h, h2, phi_prime, plan, params);
    if (!r3.pass()) {
        why = "step 3: " + r3.failed().front();
        return false;
    }
    auto h3 = h2;
    for (const auto& cfg : t.t_configs) execute_t_config(h3, cfg);
    auto r4 = tswap_report(h3, phi_prime, inst.lists, t.t_configs, params);
    if (!r4.pass()) {
        why = "step 4: " + r4.failed().front();
        return false;
    }
    std::set<EdgeRef> seen;
    for (const auto& cfg : t.t_configs) {
        for (EdgeRef e : cfg.edges()) {
            if (!seen.insert(e).second) {
                why = "step 4: configurations share " + describe(e);
                return false;
            }
        }
    }
    if (!(h3 == t.coloring)) {
        why = "recomputed coloring differs";
        return false;
    }
    return true;
}

// Random instances for the soundness sweep: dimension, density and constants
// all vary with the index.
Instance sweep_instance(int i) {
    static const double probs[] = {0.002, 0.005, 0.01, 0.03, 0.1, 0.25};
    const int d = 4 + i % 9;
    const double p = probs[(i / 9) % 6];
    const int precolor_cap = 1 + (i / 54) % 3;
    const int list_cap = 1 + (i / 7) % 3;
    auto inst = gen_random_instance(d, precolor_cap, list_cap, 1000 + i, {p, p});
    if (i % 4 == 3) {
        inst.params = ParamSet{};
        inst.params.seed = i;
        inst.params.max_tries = 50;
    } else {
        inst.params = desk_params(i);
    }
    return inst;
}

std::vector<Success> staged_successes;

}  // namespace

int main() {
    report(1, "every edge lies in d-1 two-colored four-cycles, d = 2..10", [] {
        long edges = 0;
        auto t0 = Clock::now();
        for (int d = 2; d <= 10; ++d) {
            auto h = standard_coloring(d);
            for (std::size_t k = 0; k < edge_count(d); ++k) {
                EdgeRef e = edge_at(d, k);
                auto cs = four_cycles_through(d, e);
                if (cs.size() != static_cast<std::size_t>(d - 1)) {
                    return Verdict{false, describe(e) + " has " + std::to_string(cs.size())};
                }
                std::set<int> second;
                for (const auto& c : cs) {
                    auto ce = cycle_edges(c);
                    if (std::find(ce.begin(), ce.end(), e) == ce.end()) {
                        return Verdict{false, describe(c) + " misses " + describe(e)};
                    }
                    std::set<Color> colors;
                    for (EdgeRef f : ce) colors.insert(h.get(f));
                    if (colors.size() != 2 || !is_two_colored(h, c)) {
                        return Verdict{false, describe(c) + " is not two-colored"};
                    }
                    second.insert(c.dim_a == e.dim ? c.dim_b : c.dim_a);
                }
                if (second.size() != static_cast<std::size_t>(d - 1)) {
                    return Verdict{false, describe(e) + " repeats a cycle"};
                }
                ++edges;
            }
        }
        double secs = since(t0);
        return Verdict{secs < 5.0, std::to_string(edges) + " edges checked"};
    });

    report(2, "matchings have 2^(d-1) edges and leave two halves, d = 2..10", [] {
        long checked = 0;
        for (int d = 2; d <= 10; ++d) {
            for (int i = 0; i < d; ++i) {
                auto m = dimensional_matching(d, i);
                if (m.size() != (std::size_t{1} << (d - 1))) {
                    return Verdict{false, "size at d=" + std::to_string(d)};
                }
                std::vector<int> cover(vertex_count(d), 0);
                for (EdgeRef e : m) {
                    if (e.dim != i) return Verdict{false, "wrong dimension"};
                    auto [a, b] = edge_endpoints(d, e);
                    ++cover[a];
                    ++cover[b];
                }
                for (int c : cover) {
                    if (c != 1) return Verdict{false, "not perfect"};
                }
                // components of Q_d minus the matching
                std::vector<int> comp(vertex_count(d), -1);
                std::vector<std::size_t> sizes;
                for (Vertex s = 0; s < vertex_count(d); ++s) {
                    if (comp[s] >= 0) continue;
                    int id = static_cast<int>(sizes.size());
                    sizes.push_back(0);
                    std::deque<Vertex> q{s};
                    comp[s] = id;
                    while (!q.empty()) {
                        Vertex v = q.front();
                        q.pop_front();
                        ++sizes[id];
                        for (int j = 0; j < d; ++j) {
                            if (j == i) continue;
                            Vertex w = v ^ bit(j);
                            if (comp[w] < 0) {
                                comp[w] = id;
                                q.push_back(w);
                            }
                        }
                    }
                }
                const std::size_t half = std::size_t{1} << (d - 1);
                if (sizes.size() != 2 || sizes[0] != half || sizes[1] != half) {
                    return Verdict{false, "components at d=" + std::to_string(d)};
                }
                ++checked;
            }
        }
        return Verdict{true, std::to_string(checked) + " matchings"};
    });

    report(3, "distance-3 matching instances always solve, 500 per d = 4..12", [] {
        auto t0 = Clock::now();
        long solved = 0, fast = 0;
        for (int d = 4; d <= 12; ++d) {
            for (std::uint64_t s = 0; s < 500; ++s) {
                auto inst = gen_matching_instance(d, mix_seed(d, s));
                if (!is_distance_t_matching(d, inst.constrained_edges(), 3)) {
                    return Verdict{false, "generator broke separation"};
                }
                for (EdgeRef e : inst.lists.edges()) {
                    if (std::popcount(inst.lists.mask(e)) > d - 1) {
                        return Verdict{false, "generator produced a full list"};
                    }
                }
                auto out = solve(inst);
                auto* ok = std::get_if<Success>(&out);
                if (!ok) {
                    return Verdict{false, "d=" + std::to_string(d) + " seed " + std::to_string(s) +
                                              " failed: " + std::get<Failure>(out).reason};
                }
                if (!verify_solution(inst, ok->coloring).pass()) {
                    return Verdict{false, "unverified output at d=" + std::to_string(d)};
                }
                fast += ok->trace.route == Mode::Fastpath;
                ++solved;
            }
        }
        double secs = since(t0);
        return Verdict{secs < 60.0, std::to_string(solved) + "/4500 solved, " +
                                        std::to_string(fast) + " via fast path"};
    });

    report(4, "half-palette constructions are infeasible", [] {
        auto t0 = Clock::now();
        std::vector<std::pair<std::string, Instance>> cases;
        for (int d = 2; d <= 4; ++d) {
            cases.push_back({"precoloring d=" + std::to_string(d), gen_unextendable_precoloring(d)});
            cases.push_back({"lists d=" + std::to_string(d), gen_unavoidable_lists(d)});
        }
        cases.push_back({"combined d=4", gen_combined(4, 0.25, 0.5)});
        cases.push_back({"combined d=6", gen_combined(6, 1.0 / 6, 0.5)});
        std::uint64_t nodes = 0;
        for (const auto& [name, inst] : cases) {
            auto v = exact_solve(inst);
            if (!std::holds_alternative<Infeasible>(v)) return Verdict{false, name + " not infeasible"};
            nodes += std::get<Infeasible>(v).nodes;
        }
        double secs = since(t0);
        return Verdict{secs < 120.0, std::to_string(cases.size()) + " instances, " +
                                         std::to_string(nodes) + " search nodes"};
    });

    report(5, "every solver output verifies and replays swap by swap, 1000 instances", [] {
        long ok = 0, staged = 0, fast = 0, failed = 0;
        for (int i = 0; i < 1000; ++i) {
            auto inst = sweep_instance(i);
            auto out = solve(inst);
            auto* s = std::get_if<Success>(&out);
            if (!s) {
                ++failed;
                continue;
            }
            if (!verify_solution(inst, s->coloring).pass()) {
                return Verdict{false, "instance " + std::to_string(i) + " does not verify"};
            }
            if (!(replay(s->trace, true) == s->coloring)) {
                return Verdict{false, "instance " + std::to_string(i) + " replays differently"};
            }
            ++ok;
            if (s->trace.route == Mode::Staged) {
                ++staged;
                staged_successes.push_back(*s);
            } else {
                ++fast;
            }
        }
        std::ostringstream msg;
        msg << ok << " solved (" << staged << " staged, " << fast << " fast path), " << failed
            << " honest failures";
        return Verdict{ok > 0 && staged > 0, msg.str()};
    });

    report(6, "step postconditions hold on every staged success", [] {
        // the sweep's staged successes plus a denser batch at d = 4..12
        auto all = staged_successes;
        for (int d = 4; d <= 12; ++d) {
            for (std::uint64_t s = 0; s < 25; ++s) {
                auto inst = gen_random_instance(d, 1, 2, 5000 + 100 * d + s, {0.01, 0.01});
                inst.params = desk_params(s);
                auto out = solve(inst, {Mode::Staged});
                if (auto* ok = std::get_if<Success>(&out)) all.push_back(*ok);
            }
        }
        long with_s = 0, with_t = 0;
        for (const auto& s : all) {
            std::string why;
            if (!staged_postconditions(s.trace, why)) {
                return Verdict{false, why};
            }
            with_s += !s.trace.s_swaps.empty();
            with_t += !s.trace.t_configs.empty();
        }
        std::ostringstream msg;
        msg << all.size() << " staged solves, " << with_s << " with step 3 swaps, " << with_t
            << " with step 4 configurations";
        return Verdict{!all.empty() && with_t > 0, msg.str()};
    });

    report(7, "exact oracle matches full enumeration at d = 3, 200 instances", [] {
        auto t0 = Clock::now();
        auto all = enumerate_proper_colorings(3);
        long feasible = 0, infeasible = 0, solved = 0;
        for (int i = 0; i < 200; ++i) {
            double p = 0.1 + 0.1 * (i % 5);
            auto inst = gen_random_instance(3, 1 + i % 3, 1 + (i / 3) % 2, 7000 + i, {p, p});
            inst.params = desk_params(i);
            auto v = exact_solve(inst);
            bool dumb = dumb_feasible(inst, all);
            if (std::holds_alternative<BudgetExceeded>(v)) return Verdict{false, "budget"};
            if (std::holds_alternative<Feasible>(v) != dumb) {
                return Verdict{false, "verdicts differ on instance " + std::to_string(i)};
            }
            if (auto* f = std::get_if<Feasible>(&v)) {
                if (!verify_solution(inst, f->coloring).pass()) return Verdict{false, "bad witness"};
            }
            (dumb ? feasible : infeasible)++;
            auto out = solve(inst);
            if (std::holds_alternative<Success>(out)) {
                ++solved;
                if (!dumb) return Verdict{false, "solver answered an infeasible instance"};
            }
        }
        std::ostringstream msg;
        msg << all.size() << " proper colorings enumerated, " << feasible << " feasible, "
            << infeasible << " infeasible, pipeline solved " << solved;
        return Verdict{since(t0) < 600.0 && feasible > 0 && infeasible > 0, msg.str()};
    });

    report(8, "20 repeated solves give byte-identical colorings and traces, 10 instances", [] {
        std::vector<Instance> picks;
        for (int d = 5; d <= 9; ++d) picks.push_back(gen_matching_instance(d, 99));
        for (std::uint64_t s = 0; picks.size() < 10 && s < 500; ++s) {
            int d = 6 + static_cast<int>(s % 5);
            auto inst = gen_random_instance(d, 1, 1, 9000 + s, {0.005, 0.005});
            inst.params = desk_params(s);
            auto out = solve(inst);
            auto* ok = std::get_if<Success>(&out);
            if (ok && ok->trace.route == Mode::Staged) picks.push_back(inst);
        }
        if (picks.size() < 10) return Verdict{false, "not enough solvable instances"};
        for (std::size_t k = 0; k < picks.size(); ++k) {
            std::string col, tr;
            for (int rep = 0; rep < 20; ++rep) {
                auto out = solve(picks[k]);
                auto* ok = std::get_if<Success>(&out);
                if (!ok) return Verdict{false, "instance " + std::to_string(k) + " stopped solving"};
                auto c = coloring_to_json(ok->coloring).dump();
                auto t = trace_to_json(ok->trace).dump();
                if (rep == 0) {
                    col = c;
                    tr = t;
                } else if (c != col || t != tr) {
                    return Verdict{false, "instance " + std::to_string(k) + " differs on run " +
                                              std::to_string(rep)};
                }
            }
        }
        return Verdict{true, "5 fast path and 5 staged instances"};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
