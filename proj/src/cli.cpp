#include "cubext/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "cubext/density.hpp"
#include "cubext/generators.hpp"
#include "cubext/json_io.hpp"
#include "cubext/oracle.hpp"
#include "cubext/pipeline.hpp"

namespace cubext {

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
    }
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
    out << j.dump() << "\n";
}

struct Globals {
    std::optional<std::uint64_t> seed;
    std::optional<double> radius_scale;
    std::string mode = "auto";
    std::string trace_path;
    bool quiet = false;
    bool check_swaps = false;
};

void apply_overrides(Instance& inst, const Globals& g) {
    if (g.seed) inst.params.seed = *g.seed;
    if (g.radius_scale) inst.params.radii = inst.params.radii.scaled(*g.radius_scale);
}

// One solve, shared by `solve` and `bench`.
struct SolveRun {
    int code = kExitOk;
    json stdout_json;
    std::optional<Trace> trace;
    std::string note;
};

SolveRun solve_one(Instance inst, const Globals& g) {
    apply_overrides(inst, g);
    SolveOptions opts;
    opts.mode = parse_mode(g.mode);
    opts.check_each_swap = g.check_swaps;
    SolveRun run;
    auto out = solve(inst, opts);
    if (auto* ok = std::get_if<Success>(&out)) {
        run.stdout_json = coloring_to_json(ok->coloring);
        run.note = std::string("solved via ") + to_string(ok->trace.route);
        run.trace = std::move(ok->trace);
        return run;
    }
    const auto& f = std::get<Failure>(out);
    run.stdout_json = failure_to_json(f);
    if (!f.infeasible && inst.d <= 5 && opts.mode != Mode::Oracle) {
        run.stdout_json["suggestion"] = "d <= 5: the exact oracle can decide this instance";
    }
    run.code = f.infeasible ? kExitInfeasible : kExitSolverFailure;
    run.note = std::string("failed at ") + to_string(f.step) + ": " + f.reason;
    return run;
}

int cmd_solve(const std::string& path, const Globals& g, std::ostream& out, std::ostream& err) {
    SolveRun run = solve_one(instance_from_json(read_json(path)), g);
    if (run.trace && !g.trace_path.empty()) write_json(g.trace_path, trace_to_json(*run.trace));
    out << run.stdout_json.dump() << "\n";
    if (!g.quiet) err << run.note << "\n";
    return run.code;
}

int cmd_verify(const std::string& ipath, const std::string& cpath, const Globals& g,
               std::ostream& out, std::ostream& err) {
    const Instance inst = instance_from_json(read_json(ipath));
    const TotalColoring c = coloring_from_json(read_json(cpath));
    if (c.dim() != inst.d) {
        throw Error(ErrorKind::DimensionMismatch, "coloring and instance differ in d");
    }
    const BoundReport r = verify_solution(inst, c, static_cast<std::size_t>(inst.params.report_cap));
    out << report_to_json(r).dump() << "\n";
    if (!g.quiet) err << (r.pass() ? "valid" : "invalid") << "\n";
    return r.pass() ? kExitOk : kExitVerifyFailed;
}

int cmd_oracle(const std::string& path, std::uint64_t budget, const Globals& g,
               std::ostream& out, std::ostream& err) {
    Instance inst = instance_from_json(read_json(path));
    apply_overrides(inst, g);
    auto v = exact_solve(inst, budget);
    if (auto* f = std::get_if<Feasible>(&v)) {
        out << coloring_to_json(f->coloring).dump() << "\n";
        if (!g.quiet) err << "feasible after " << f->nodes << " nodes\n";
        return kExitOk;
    }
    if (auto* n = std::get_if<Infeasible>(&v)) {
        out << json{{"status", "infeasible"}, {"nodes", n->nodes}}.dump() << "\n";
        if (!g.quiet) err << "infeasible after " << n->nodes << " nodes\n";
        return kExitInfeasible;
    }
    const auto nodes = std::get<BudgetExceeded>(v).nodes;
    out << json{{"status", "budget_exceeded"}, {"nodes", nodes}}.dump() << "\n";
    if (!g.quiet) err << "gave up after " << nodes << " nodes\n";
    return kExitSolverFailure;
}

int cmd_replay(const std::string& path, const Globals& g, std::ostream& out, std::ostream& err) {
    const Trace t = trace_from_json(read_json(path));
    try {
        const TotalColoring c = replay(t, true);
        out << coloring_to_json(c).dump() << "\n";
        if (!g.quiet) err << "replay reproduced the recorded coloring\n";
        return kExitOk;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::CorruptTrace) throw;
        out << error_to_json(e).dump() << "\n";
        return kExitVerifyFailed;
    }
}

struct BenchItem {
    int code = kExitOk;
    json summary;
};

int cmd_bench(const std::string& path, const Globals& g, std::ostream& out, std::ostream& err) {
    const json cfg = read_json(path);
    if (!cfg.is_object()) throw Error(ErrorKind::InvalidInput, "bench config must be an object");
    for (const auto& [k, v] : cfg.items()) {
        if (k != "instances" && k != "out_dir" && k != "jobs" && k != "mode" &&
            k != "radius_scale" && k != "seed") {
            throw Error(ErrorKind::InvalidInput, "unknown field '" + k + "' in bench config");
        }
    }
    if (!cfg.contains("instances") || !cfg["instances"].is_array()) {
        throw Error(ErrorKind::InvalidInput, "bench config needs an 'instances' array");
    }
    const auto base_dir = std::filesystem::path(path).parent_path();
    auto resolve = [&](const std::string& p) {
        const std::filesystem::path q(p);
        return (q.is_absolute() ? q : base_dir / q).string();
    };
    std::vector<std::string> files;
    for (const json& x : cfg["instances"]) {
        if (!x.is_string()) throw Error(ErrorKind::InvalidInput, "instance paths must be strings");
        files.push_back(resolve(x.get<std::string>()));
    }
    Globals local = g;
    if (cfg.contains("mode")) local.mode = cfg["mode"].get<std::string>();
    if (cfg.contains("radius_scale")) local.radius_scale = cfg["radius_scale"].get<double>();
    if (cfg.contains("seed")) local.seed = cfg["seed"].get<std::uint64_t>();
    parse_mode(local.mode);
    std::string out_dir;
    if (cfg.contains("out_dir")) {
        out_dir = resolve(cfg["out_dir"].get<std::string>());
        std::filesystem::create_directories(out_dir);
    }
    int jobs = cfg.contains("jobs") ? cfg["jobs"].get<int>() : 1;
    jobs = std::clamp(jobs, 1, 64);

    std::vector<BenchItem> items(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            BenchItem& item = items[i];
            item.summary = {{"index", i}, {"instance", cfg["instances"][i]}};
            try {
                SolveRun r = solve_one(instance_from_json(read_json(files[i])), local);
                item.code = r.code;
                item.summary["exit"] = r.code;
                if (r.trace) {
                    item.summary["status"] = "solved";
                    item.summary["route"] = to_string(r.trace->route);
                } else {
                    item.summary["status"] = r.stdout_json["status"];
                    item.summary["step"] = r.stdout_json["step"];
                }
                if (!out_dir.empty()) {
                    const std::string stem = out_dir + "/" + std::to_string(i);
                    write_json(stem + ".result.json", r.stdout_json);
                    if (r.trace) write_json(stem + ".trace.json", trace_to_json(*r.trace));
                }
            } catch (const Error& e) {
                item.code = kExitInputError;
                item.summary["exit"] = kExitInputError;
                item.summary["status"] = "error";
                item.summary["error"] = error_to_json(e)["error"];
            }
        }
    };
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::future<void>> pool;
    for (int k = 0; k < jobs; ++k) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    json results = json::array();
    int solved = 0, failed = 0, errors = 0;
    for (const auto& item : items) {
        results.push_back(item.summary);
        if (item.code == kExitOk) ++solved;
        else if (item.code == kExitInputError) ++errors;
        else ++failed;
    }
    out << json{{"total", items.size()},
                {"solved", solved},
                {"failed", failed},
                {"errors", errors},
                {"results", results}}
               .dump()
        << "\n";
    if (!g.quiet) {
        err << solved << "/" << items.size() << " solved in " << secs << " s with " << jobs
            << " jobs\n";
    }
    return errors > 0 ? kExitInputError : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Precoloring extension and list-avoiding edge coloring of hypercubes"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    std::uint64_t seed_value = 0;
    double scale_value = 1.0;
    auto* seed_opt = app.add_option("--seed", seed_value, "RNG seed (overrides params)");
    auto* scale_opt =
        app.add_option("--radius-scale", scale_value, "multiply every radius, rounding down");
    app.add_option("--mode", g.mode, "auto, staged, fastpath or oracle")
        ->check(CLI::IsMember({"auto", "staged", "fastpath", "oracle"}));
    app.add_option("--trace", g.trace_path, "write a replayable trace here");
    app.add_flag("--quiet", g.quiet, "no notes on stderr");
    app.add_flag("--check-swaps", g.check_swaps, "check properness after every swap");

    std::string path, path2;
    auto* solve_cmd = app.add_subcommand("solve", "solve an instance");
    solve_cmd->add_option("instance", path)->required();

    auto* verify_cmd = app.add_subcommand("verify", "check a coloring against an instance");
    verify_cmd->add_option("instance", path)->required();
    verify_cmd->add_option("coloring", path2)->required();

    std::uint64_t budget = kDefaultOracleBudget;
    auto* oracle_cmd = app.add_subcommand("oracle", "decide an instance exactly");
    oracle_cmd->add_option("instance", path)->required();
    oracle_cmd->add_option("--budget", budget, "node limit");

    auto* replay_cmd = app.add_subcommand("replay", "re-run a trace and check it");
    replay_cmd->add_option("trace", path)->required();

    auto* bench_cmd = app.add_subcommand("bench", "solve a batch of instances");
    bench_cmd->add_option("config", path)->required();

    auto* gen = app.add_subcommand("generate", "write an instance");
    gen->require_subcommand(1);
    int d = 4, precolor_cap = 1, list_cap = 1, separation = 3, max_edges = 0, a = -1, b = -1;
    double precolor_prob = RandomOptions{}.precolor_prob, list_prob = RandomOptions{}.list_prob;
    double alpha = -1, beta = -1;
    int radius = -1;
    auto* g_random = gen->add_subcommand("random", "seeded random instance");
    g_random->add_option("--d", d)->required();
    g_random->add_option("--precolor-cap", precolor_cap);
    g_random->add_option("--list-cap", list_cap);
    g_random->add_option("--precolor-prob", precolor_prob);
    g_random->add_option("--list-prob", list_prob);
    g_random->add_option("--radius", radius, "radius for the density report");
    auto* g_match = gen->add_subcommand("matching", "constrained edges on a distance-t matching");
    g_match->add_option("--d", d)->required();
    g_match->add_option("--separation", separation);
    g_match->add_option("--max-edges", max_edges);
    auto* g_i = gen->add_subcommand("prop4i", "unextendable precoloring");
    g_i->add_option("--d", d)->required();
    auto* g_ii = gen->add_subcommand("prop4ii", "unavoidable lists");
    g_ii->add_option("--d", d)->required();
    auto* g_iii = gen->add_subcommand("prop4iii", "combined precoloring and lists");
    g_iii->add_option("--d", d)->required();
    g_iii->add_option("--alpha", alpha);
    g_iii->add_option("--beta", beta);
    g_iii->add_option("--a", a, "precolored edges per endpoint");
    g_iii->add_option("--b", b, "listed edges per endpoint");

    std::vector<const char*> argv;
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        out << json{{"error", {{"kind", "Usage"}, {"message", e.what()}}}}.dump() << "\n";
        return kExitInputError;
    }
    if (*seed_opt) g.seed = seed_value;
    if (*scale_opt) g.radius_scale = scale_value;

    try {
        if (*solve_cmd) return cmd_solve(path, g, out, err);
        if (*verify_cmd) return cmd_verify(path, path2, g, out, err);
        if (*oracle_cmd) return cmd_oracle(path, budget, g, out, err);
        if (*replay_cmd) return cmd_replay(path, g, out, err);
        if (*bench_cmd) return cmd_bench(path, g, out, err);
        if (*gen) {
            const std::uint64_t s = g.seed.value_or(0);
            Instance inst(1);
            if (*g_random) {
                inst = gen_random_instance(d, precolor_cap, list_cap, s,
                                           {precolor_prob, list_prob});
                const int r = radius >= 0 ? radius : inst.params.radii.density;
                const DensityProfile prof = measure_density(inst, r);
                if (!g.quiet) {
                    err << json{{"radius", r},
                                {"alpha", prof.alpha(d)},
                                {"beta", prof.beta(d)}}
                               .dump()
                        << "\n";
                }
            } else if (*g_match) {
                MatchingOptions mo;
                mo.separation = separation;
                mo.max_edges = max_edges;
                inst = gen_matching_instance(d, s, mo);
            } else if (*g_i) {
                inst = gen_unextendable_precoloring(d);
            } else if (*g_ii) {
                inst = gen_unavoidable_lists(d);
            } else {
                if (a >= 0 || b >= 0) {
                    inst = gen_combined_counts(d, a, b);
                } else {
                    inst = gen_combined(d, alpha, beta);
                }
            }
            if (g.seed) inst.params.seed = *g.seed;
            if (g.radius_scale) inst.params.radii = inst.params.radii.scaled(*g.radius_scale);
            out << instance_to_json(inst).dump() << "\n";
            return kExitOk;
        }
    } catch (const Error& e) {
        out << error_to_json(e).dump() << "\n";
        if (!g.quiet) err << to_string(e.kind()) << ": " << e.what() << "\n";
        return kExitInputError;
    } catch (const json::exception& e) {
        out << json{{"error", {{"kind", "InvalidInput"}, {"message", e.what()}}}}.dump() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace cubext
