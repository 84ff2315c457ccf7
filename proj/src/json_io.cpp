#include "cubext/json_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>

namespace cubext {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

void expect_object(const json& j, const char* what, std::initializer_list<const char*> keys) {
    if (!j.is_object()) bad(std::string(what) + " must be an object");
    for (const auto& [k, v] : j.items()) {
        if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; })) {
            bad("unknown field '" + k + "' in " + what);
        }
    }
}

const json& field(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string(what) + " lacks '" + key + "'");
    return *it;
}

long long as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    if (j.is_number_unsigned()) {
        const auto u = j.get<unsigned long long>();
        if (u > static_cast<unsigned long long>(INT64_MAX)) bad(std::string(what) + " too large");
        return static_cast<long long>(u);
    }
    return j.get<long long>();
}

double as_number(const json& j, const char* what) {
    if (!j.is_number()) bad(std::string(what) + " must be a number");
    return j.get<double>();
}

EdgeRef edge_of(const json& j, int d, const char* what) {
    const long long base = as_int(field(j, "base", what), "base");
    const long long dim = as_int(field(j, "dim", what), "dim");
    if (base < 0 || base >= static_cast<long long>(vertex_count(d)) || dim < 0 || dim >= d) {
        throw Error(ErrorKind::OutOfRange, std::string(what) + " edge out of range");
    }
    const EdgeRef e{static_cast<Vertex>(base), static_cast<Dim>(dim)};
    check_edge(d, e);
    return e;
}

Color color_of(const json& j, int d, const char* what) {
    const long long c = as_int(j, what);
    if (c < 1 || c > d) {
        throw Error(ErrorKind::OutOfRange,
                    std::string(what) + " " + std::to_string(c) + " outside 1.." +
                        std::to_string(d));
    }
    return static_cast<Color>(c - 1);
}

json edge_json(EdgeRef e) { return {{"base", e.base}, {"dim", e.dim}}; }

json cycle_json(const FourCycle& c) {
    return {{"base", c.base}, {"dim_a", c.dim_a}, {"dim_b", c.dim_b}};
}

json swap_json(const PlannedSwap& s) {
    return {{"cycle", cycle_json(s.cycle)}, {"colors", {s.on_a + 1, s.on_b + 1}}};
}

json color_or_null(Color c) { return c == kNoColor ? json(nullptr) : json(c + 1); }

}  // namespace

ParamSet params_from_json(const json& j, ParamSet p) {
    expect_object(j, "params",
                  {"alpha", "beta", "gamma", "kappa", "epsilon", "epsilon0", "tau", "radii",
                   "seed", "max_tries", "restarts", "exhaustive_max_d", "report_cap",
                   "fastpath_distance"});
    auto num = [&](const char* k, double& out) {
        if (j.contains(k)) out = as_number(j[k], k);
    };
    auto integer = [&](const char* k, int& out) {
        if (!j.contains(k)) return;
        const long long v = as_int(j[k], k);
        if (v < INT32_MIN || v > INT32_MAX) bad(std::string(k) + " out of range");
        out = static_cast<int>(v);
    };
    num("alpha", p.alpha);
    num("beta", p.beta);
    num("gamma", p.gamma);
    num("kappa", p.kappa);
    num("epsilon", p.epsilon);
    num("epsilon0", p.epsilon0);
    num("tau", p.tau);
    integer("max_tries", p.max_tries);
    integer("restarts", p.restarts);
    integer("exhaustive_max_d", p.exhaustive_max_d);
    integer("report_cap", p.report_cap);
    integer("fastpath_distance", p.fastpath_distance);
    if (j.contains("seed")) {
        const json& s = j["seed"];
        if (!s.is_number_integer() || (s.is_number_integer() && !s.is_number_unsigned() &&
                                       s.get<long long>() < 0)) {
            bad("seed must be a nonnegative integer");
        }
        p.seed = s.get<std::uint64_t>();
    }
    if (j.contains("radii")) {
        const json& r = j["radii"];
        expect_object(r, "radii",
                      {"density", "step1_requested", "color_overload", "promote_density",
                       "promote_requested", "swap_budget", "swap_overload", "sswap_post",
                       "tswap_post"});
        auto rad = [&](const char* k, int& out) {
            if (!r.contains(k)) return;
            const long long v = as_int(r[k], k);
            if (v < 0 || v > 64) bad(std::string("radius ") + k + " out of range");
            out = static_cast<int>(v);
        };
        rad("density", p.radii.density);
        rad("step1_requested", p.radii.step1_requested);
        rad("color_overload", p.radii.color_overload);
        rad("promote_density", p.radii.promote_density);
        rad("promote_requested", p.radii.promote_requested);
        rad("swap_budget", p.radii.swap_budget);
        rad("swap_overload", p.radii.swap_overload);
        rad("sswap_post", p.radii.sswap_post);
        rad("tswap_post", p.radii.tswap_post);
    }
    p.validate();
    return p;
}

json params_to_json(const ParamSet& p) {
    const ParamSet def;
    json j = json::object();
    auto num = [&](const char* k, double v, double dv) {
        if (v != dv) j[k] = v;
    };
    num("alpha", p.alpha, def.alpha);
    num("beta", p.beta, def.beta);
    num("gamma", p.gamma, def.gamma);
    num("kappa", p.kappa, def.kappa);
    num("epsilon", p.epsilon, def.epsilon);
    num("epsilon0", p.epsilon0, def.epsilon0);
    num("tau", p.tau, def.tau);
    if (!(p.radii == def.radii)) {
        j["radii"] = {{"density", p.radii.density},
                      {"step1_requested", p.radii.step1_requested},
                      {"color_overload", p.radii.color_overload},
                      {"promote_density", p.radii.promote_density},
                      {"promote_requested", p.radii.promote_requested},
                      {"swap_budget", p.radii.swap_budget},
                      {"swap_overload", p.radii.swap_overload},
                      {"sswap_post", p.radii.sswap_post},
                      {"tswap_post", p.radii.tswap_post}};
    }
    if (p.seed != def.seed) j["seed"] = p.seed;
    if (p.max_tries != def.max_tries) j["max_tries"] = p.max_tries;
    if (p.restarts != def.restarts) j["restarts"] = p.restarts;
    if (p.exhaustive_max_d != def.exhaustive_max_d) j["exhaustive_max_d"] = p.exhaustive_max_d;
    if (p.report_cap != def.report_cap) j["report_cap"] = p.report_cap;
    if (p.fastpath_distance != def.fastpath_distance) {
        j["fastpath_distance"] = p.fastpath_distance;
    }
    return j;
}

Instance instance_from_json(const json& j) {
    expect_object(j, "instance", {"d", "precoloring", "lists", "params"});
    const long long dl = as_int(field(j, "d", "instance"), "d");
    if (dl < 1 || dl > kMaxDim) {
        throw Error(ErrorKind::OutOfRange, "d must be in 1.." + std::to_string(kMaxDim));
    }
    const int d = static_cast<int>(dl);
    Instance inst(d);
    std::set<EdgeRef> seen_pre, seen_list;

    if (j.contains("precoloring")) {
        const json& arr = j["precoloring"];
        if (!arr.is_array()) bad("precoloring must be an array");
        for (const json& x : arr) {
            expect_object(x, "precoloring entry", {"base", "dim", "color"});
            const EdgeRef e = edge_of(x, d, "precoloring");
            if (!seen_pre.insert(e).second) bad("duplicate precolored edge " + describe(e));
            inst.precoloring.set(e, color_of(field(x, "color", "precoloring entry"), d, "color"));
        }
    }
    if (j.contains("lists")) {
        const json& arr = j["lists"];
        if (!arr.is_array()) bad("lists must be an array");
        for (const json& x : arr) {
            expect_object(x, "list entry", {"base", "dim", "colors"});
            const EdgeRef e = edge_of(x, d, "lists");
            if (!seen_list.insert(e).second) bad("duplicate list edge " + describe(e));
            const json& cs = field(x, "colors", "list entry");
            if (!cs.is_array()) bad("list colors must be an array");
            ColorMask m = 0;
            for (const json& c : cs) {
                const Color col = color_of(c, d, "list color");
                if (m & color_bit(col)) bad("repeated color in list of " + describe(e));
                m |= color_bit(col);
            }
            inst.lists.set(e, m);
        }
    }
    if (j.contains("params")) inst.params = params_from_json(j["params"]);
    return inst;
}

json instance_to_json(const Instance& inst) {
    json pre = json::array();
    for (EdgeRef e : inst.precoloring.edges()) {
        pre.push_back({{"base", e.base}, {"dim", e.dim}, {"color", inst.precoloring.get(e) + 1}});
    }
    json lists = json::array();
    for (EdgeRef e : inst.lists.edges()) {
        json cs = json::array();
        const ColorMask m = inst.lists.mask(e);
        for (int c = 0; c < inst.d; ++c) {
            if (m & color_bit(static_cast<Color>(c))) cs.push_back(c + 1);
        }
        lists.push_back({{"base", e.base}, {"dim", e.dim}, {"colors", cs}});
    }
    json j = {{"d", inst.d}, {"precoloring", pre}, {"lists", lists}};
    json p = params_to_json(inst.params);
    if (!p.empty()) j["params"] = p;
    return j;
}

TotalColoring coloring_from_json(const json& j) {
    expect_object(j, "coloring", {"d", "colors"});
    const long long dl = as_int(field(j, "d", "coloring"), "d");
    if (dl < 1 || dl > kMaxDim) throw Error(ErrorKind::OutOfRange, "coloring d out of range");
    const int d = static_cast<int>(dl);
    const json& cs = field(j, "colors", "coloring");
    if (!cs.is_array() || cs.size() != edge_count(d)) {
        throw Error(ErrorKind::DimensionMismatch,
                    "coloring must list " + std::to_string(edge_count(d)) + " colors");
    }
    std::vector<Color> colors;
    colors.reserve(cs.size());
    for (const json& c : cs) colors.push_back(color_of(c, d, "color"));
    return TotalColoring(d, std::move(colors));
}

json coloring_to_json(const TotalColoring& c) {
    json cs = json::array();
    for (Color x : c.by_index()) cs.push_back(x + 1);
    return {{"d", c.dim()}, {"colors", cs}};
}

json report_to_json(const BoundReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json v = json::array();
        for (const auto& x : c.violations) {
            v.push_back({{"witness", x.witness}, {"observed", x.observed}});
        }
        checks.push_back({{"name", c.name},
                          {"kind", c.kind == BoundCheck::Kind::AtMost ? "at_most" : "at_least"},
                          {"limit", c.limit},
                          {"worst", c.worst},
                          {"worst_witness", c.worst_witness},
                          {"margin", c.margin()},
                          {"pass", c.pass()},
                          {"violation_count", c.violation_count},
                          {"violations", v}});
    }
    return {{"pass", r.pass()}, {"checks", checks}};
}

json reports_to_json(const std::vector<NamedReport>& rs) {
    json out = json::object();
    for (const auto& [name, r] : rs) out[name] = report_to_json(r);
    return out;
}

json trace_to_json(const Trace& t) {
    json j = {{"route", to_string(t.route)}, {"instance", instance_to_json(t.instance)}};
    if (t.route == Mode::Staged) {
        json rho = json::array();
        for (Color c : t.rho.image()) rho.push_back(c + 1);
        json promos = json::array();
        for (const auto& [e, c] : t.promotions) {
            promos.push_back({{"base", e.base}, {"dim", e.dim}, {"color", c + 1}});
        }
        json s = json::array();
        for (std::size_t i = 0; i < t.s_swaps.size(); ++i) {
            json x = swap_json(t.s_swaps[i]);
            x["unexpected"] = edge_json(t.s_unexpected[i]);
            s.push_back(x);
        }
        json tc = json::array();
        for (const auto& cfg : t.t_configs) {
            json verts = json::array();
            for (int i = 1; i <= 14; ++i) {
                verts.push_back(cfg.v[i] == kNoVertex ? json(nullptr) : json(cfg.v[i]));
            }
            json swaps = json::array();
            for (const auto& sw : cfg.swaps) swaps.push_back(swap_json(sw));
            json pre = json::array(), pre_colors = json::array(), mcol = json::array();
            for (int k = 0; k < 3; ++k) {
                pre.push_back(cfg.pre_swap[k]);
                pre_colors.push_back(color_or_null(cfg.pre_color[k]));
                mcol.push_back(color_or_null(cfg.matching_color[k]));
            }
            tc.push_back({{"target", edge_json(cfg.target)},
                          {"vertices", verts},
                          {"spoke", cfg.spoke},
                          {"c1", cfg.c1 + 1},
                          {"c2", cfg.c2 + 1},
                          {"c3", cfg.c3 + 1},
                          {"pre_swap", pre},
                          {"pre_colors", pre_colors},
                          {"matching_colors", mcol},
                          {"swaps", swaps}});
        }
        j["restart"] = t.restart;
        j["rho"] = rho;
        j["promotions"] = promos;
        j["s_swaps"] = s;
        j["t_configs"] = tc;
    } else if (t.route == Mode::Fastpath) {
        json f = json::array();
        for (const auto& sw : t.fast_swaps) f.push_back(swap_json(sw));
        j["swaps"] = f;
    }
    j["coloring"] = coloring_to_json(t.coloring);
    return j;
}

namespace {

FourCycle cycle_from(const json& j, int d) {
    expect_object(j, "cycle", {"base", "dim_a", "dim_b"});
    FourCycle c;
    c.base = static_cast<Vertex>(as_int(field(j, "base", "cycle"), "base"));
    c.dim_a = static_cast<Dim>(as_int(field(j, "dim_a", "cycle"), "dim_a"));
    c.dim_b = static_cast<Dim>(as_int(field(j, "dim_b", "cycle"), "dim_b"));
    check_cycle(d, c);
    return c;
}

PlannedSwap swap_from(const json& j, int d, bool with_unexpected) {
    if (with_unexpected) {
        expect_object(j, "swap", {"cycle", "colors", "unexpected"});
    } else {
        expect_object(j, "swap", {"cycle", "colors"});
    }
    PlannedSwap s;
    s.cycle = cycle_from(field(j, "cycle", "swap"), d);
    const json& cs = field(j, "colors", "swap");
    if (!cs.is_array() || cs.size() != 2) bad("swap colors must be a pair");
    s.on_a = color_of(cs[0], d, "swap color");
    s.on_b = color_of(cs[1], d, "swap color");
    return s;
}

Color optional_color(const json& j, int d) {
    return j.is_null() ? kNoColor : color_of(j, d, "color");
}

Trace parse_trace(const json& j) {
    expect_object(j, "trace",
                  {"route", "instance", "restart", "rho", "promotions", "s_swaps", "t_configs",
                   "swaps", "coloring"});
    Trace t;
    const json& route = field(j, "route", "trace");
    if (!route.is_string()) bad("route must be a string");
    t.route = parse_mode(route.get<std::string>());
    t.instance = instance_from_json(field(j, "instance", "trace"));
    const int d = t.instance.d;
    t.coloring = coloring_from_json(field(j, "coloring", "trace"));
    if (t.route == Mode::Staged) {
        t.restart = static_cast<int>(as_int(field(j, "restart", "trace"), "restart"));
        std::vector<Color> rho;
        for (const json& c : field(j, "rho", "trace")) rho.push_back(color_of(c, d, "rho"));
        t.rho = ColorPermutation(std::move(rho));
        for (const json& x : field(j, "promotions", "trace")) {
            expect_object(x, "promotion", {"base", "dim", "color"});
            t.promotions.emplace_back(edge_of(x, d, "promotion"),
                                      color_of(field(x, "color", "promotion"), d, "color"));
        }
        for (const json& x : field(j, "s_swaps", "trace")) {
            t.s_swaps.push_back(swap_from(x, d, true));
            t.s_unexpected.push_back(edge_of(field(x, "unexpected", "swap"), d, "unexpected"));
        }
        for (const json& x : field(j, "t_configs", "trace")) {
            expect_object(x, "configuration",
                          {"target", "vertices", "spoke", "c1", "c2", "c3", "pre_swap",
                           "pre_colors", "matching_colors", "swaps"});
            TConfig cfg;
            cfg.target = edge_of(field(x, "target", "configuration"), d, "target");
            cfg.v.fill(kNoVertex);
            const json& verts = field(x, "vertices", "configuration");
            if (!verts.is_array() || verts.size() != 14) bad("configuration needs 14 vertices");
            for (int i = 0; i < 14; ++i) {
                if (verts[i].is_null()) continue;
                const long long v = as_int(verts[i], "vertex");
                if (v < 0 || v >= static_cast<long long>(vertex_count(d))) {
                    throw Error(ErrorKind::OutOfRange, "vertex out of range");
                }
                cfg.v[i + 1] = static_cast<Vertex>(v);
            }
            cfg.spoke = static_cast<Dim>(as_int(field(x, "spoke", "configuration"), "spoke"));
            cfg.c1 = color_of(field(x, "c1", "configuration"), d, "c1");
            cfg.c2 = color_of(field(x, "c2", "configuration"), d, "c2");
            cfg.c3 = color_of(field(x, "c3", "configuration"), d, "c3");
            const json& pre = field(x, "pre_swap", "configuration");
            const json& pc = field(x, "pre_colors", "configuration");
            const json& mc = field(x, "matching_colors", "configuration");
            if (pre.size() != 3 || pc.size() != 3 || mc.size() != 3) bad("bad gadget arrays");
            for (int k = 0; k < 3; ++k) {
                if (!pre[k].is_boolean()) bad("pre_swap entries must be booleans");
                cfg.pre_swap[k] = pre[k].get<bool>();
                cfg.pre_color[k] = optional_color(pc[k], d);
                cfg.matching_color[k] = optional_color(mc[k], d);
            }
            for (const json& s : field(x, "swaps", "configuration")) {
                cfg.swaps.push_back(swap_from(s, d, false));
            }
            t.t_configs.push_back(std::move(cfg));
        }
    } else if (t.route == Mode::Fastpath) {
        for (const json& s : field(j, "swaps", "trace")) t.fast_swaps.push_back(swap_from(s, d, false));
    }
    return t;
}

}  // namespace

Trace trace_from_json(const json& j) {
    try {
        return parse_trace(j);
    } catch (const Error& e) {
        throw Error(ErrorKind::CorruptTrace, e.what());
    } catch (const json::exception& e) {
        throw Error(ErrorKind::CorruptTrace, e.what());
    }
}

json failure_to_json(const Failure& f) {
    json j = {{"status", f.infeasible ? "infeasible" : "failure"},
              {"step", to_string(f.step)},
              {"reason", f.reason}};
    if (f.restarts > 0) j["restarts"] = f.restarts;
    if (!f.reports.empty()) j["reports"] = reports_to_json(f.reports);
    return j;
}

json error_to_json(const Error& e) {
    return {{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
}

}  // namespace cubext
