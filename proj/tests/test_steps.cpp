#include <doctest.h>

#include <set>

#include "cubext/generators.hpp"
#include "cubext/permute.hpp"
#include "cubext/promote.hpp"
#include "cubext/random.hpp"
#include "cubext/sswap.hpp"
#include "cubext/tswap.hpp"
#include "support.hpp"

using namespace cubext;
using namespace testing;

// ---- step 1

TEST_CASE("evaluate_permutation on an empty instance") {
    for (int d = 2; d <= 6; ++d) {
        ParamSet p;
        auto r = evaluate_permutation(standard_coloring(d), ColorPermutation::identity(d),
                                      PartialColoring(d), ListAssignment(d), p);
        CHECK(r.pass());
        for (const char* n : {kStep1A, kStep1B, kStep1C, kStep1D}) {
            CHECK(r.find(n)->worst == 0);
        }
        CHECK(r.find(kStep1E)->worst == d - 1);
    }
}

TEST_CASE("evaluate_permutation counts conflicts") {
    ListAssignment l(2);
    l.add({0, 0}, 0);
    ParamSet p;
    auto h = standard_coloring(2);
    auto id = evaluate_permutation(h, ColorPermutation::identity(2), PartialColoring(2), l, p);
    CHECK_FALSE(id.find(kStep1D)->pass());
    CHECK(id.find(kStep1D)->worst == 1);
    CHECK(id.find(kStep1D)->violation_count == 2);  // vertices 0 and 1

    auto tr = evaluate_permutation(h, ColorPermutation({1, 0}), PartialColoring(2), l, p);
    CHECK(tr.find(kStep1D)->pass());
    CHECK(tr.find(kStep1D)->worst == 0);
}

TEST_CASE("ColorPermutation") {
    CHECK_THROWS_AS(ColorPermutation({0, 0}), Error);
    ColorPermutation r({2, 0, 1});
    auto inv = r.inverse();
    for (Color c = 0; c < 3; ++c) CHECK(inv(r(c)) == c);
    auto h = permute_colors(standard_coloring(3), r);
    CHECK(h.get({0, 0}) == 2);
    CHECK(is_proper(h));
}

TEST_CASE("allowed_cycle_floor") {
    CHECK(allowed_cycle_floor(4, ParamSet::kDefaultTau) == 3);
    CHECK(allowed_cycle_floor(10, 0.5) == 5);
    CHECK(allowed_cycle_floor(200, ParamSet::kDefaultTau) == 199);
}

TEST_CASE("find_permutation") {
    ParamSet p;
    auto out = find_permutation(standard_coloring(4), PartialColoring(4), ListAssignment(4), p);
    REQUIRE(std::holds_alternative<PermutationFound>(out));
    CHECK(std::get<PermutationFound>(out).rho == ColorPermutation::identity(4));
    CHECK(std::get<PermutationFound>(out).trial == 0);

    // d=2 single list: both permutations decide the verdict
    ListAssignment l(2);
    l.add({0, 0}, 0);
    auto h = standard_coloring(2);
    bool any = false;
    for (auto img : {std::vector<Color>{0, 1}, std::vector<Color>{1, 0}}) {
        any = any || evaluate_permutation(h, ColorPermutation(img), PartialColoring(2), l, p).pass();
    }
    auto r2 = find_permutation(h, PartialColoring(2), l, p);
    CHECK(std::holds_alternative<PermutationFound>(r2) == any);
    if (auto* nf = std::get_if<NoPermutationFound>(&r2)) CHECK(nf->exhaustive);
}

TEST_CASE("find_permutation at d=8 with sparse lists") {
    ParamSet p;
    p.gamma = 0.5;
    p.tau = 0.5;
    int found = 0;
    for (std::uint64_t s = 0; s < 5; ++s) {
        auto inst = gen_random_instance(8, 0, 1, s);
        p.seed = s;
        auto out = find_permutation(standard_coloring(8), inst.precoloring, inst.lists, p);
        if (auto* f = std::get_if<PermutationFound>(&out)) {
            ++found;
            auto again = evaluate_permutation(standard_coloring(8), f->rho, inst.precoloring,
                                              inst.lists, p);
            CHECK(again.pass());
            CHECK(f->coloring == permute_colors(standard_coloring(8), f->rho));
        }
    }
    CHECK(found == 5);
}

TEST_CASE("find_permutation is deterministic") {
    auto p = desk_params(11);
    auto inst = gen_random_instance(7, 2, 2, 3);
    auto h = standard_coloring(7);
    auto a = find_permutation(h, inst.precoloring, inst.lists, p);
    auto b = find_permutation(h, inst.precoloring, inst.lists, p);
    REQUIRE(a.index() == b.index());
    if (auto* f = std::get_if<PermutationFound>(&a)) {
        CHECK(f->rho == std::get<PermutationFound>(b).rho);
    } else {
        CHECK(std::get<NoPermutationFound>(a).best_rho ==
              std::get<NoPermutationFound>(b).best_rho);
    }
}

TEST_CASE("exhaustive verdict at small d is exact") {
    ParamSet p;
    p.exhaustive_max_d = 8;
    p.max_tries = 2;
    auto h = standard_coloring(3);
    for (std::uint64_t s = 0; s < 30; ++s) {
        auto inst = gen_random_instance(3, 1, 1, s);
        auto out = find_permutation(h, inst.precoloring, inst.lists, p);
        std::vector<Color> img{0, 1, 2};
        bool any = false;
        do {
            any = any || evaluate_permutation(h, ColorPermutation(img), inst.precoloring,
                                              inst.lists, p)
                             .pass();
        } while (std::next_permutation(img.begin(), img.end()));
        CHECK(std::holds_alternative<PermutationFound>(out) == any);
    }
}

// ---- step 2

TEST_CASE("allowed_list") {
    ParamSet p;
    auto h = standard_coloring(4);
    PartialColoring phi(4);
    PromotionState fresh(h, phi);
    ListAssignment none(4);
    CHECK(allowed_list({0, 0}, fresh, h, none, p) == full_mask(4));

    phi.set({0, 2}, 2);
    ListAssignment l(4);
    l.set({0, 0}, color_bit(0) | color_bit(1));
    PromotionState st(h, phi);
    CHECK(allowed_list({0, 0}, st, h, l, p) == color_bit(3));
}

TEST_CASE("promote_conflicts") {
    ParamSet p;
    auto h = standard_coloring(4);
    PartialColoring phi(4);
    phi.set({0, 1}, 1);
    auto none = promote_conflicts(h, phi, ListAssignment(4), p);
    REQUIRE(std::holds_alternative<Promotion>(none));
    CHECK(std::get<Promotion>(none).phi_prime == phi);

    ListAssignment l2(2);
    l2.add({0, 0}, 0);
    auto one = promote_conflicts(standard_coloring(2), PartialColoring(2), l2, p);
    REQUIRE(std::holds_alternative<Promotion>(one));
    const auto& pr = std::get<Promotion>(one);
    CHECK(pr.phi_prime.size() == 1);
    CHECK(pr.phi_prime.get({0, 0}) == 1);

    PartialColoring blocked(4);
    blocked.set({0, 1}, 1);
    blocked.set({0, 2}, 2);
    ListAssignment l4(4);
    l4.set({0, 0}, color_bit(0) | color_bit(3));
    auto stuck = promote_conflicts(h, blocked, l4, p);
    REQUIRE(std::holds_alternative<PromotionFailed>(stuck));
    CHECK(std::get<PromotionFailed>(stuck).edge == EdgeRef{0, 0});
    CHECK(std::get<PromotionFailed>(stuck).allowed == 0);
}

TEST_CASE("promotion properties on random instances") {
    for (int d = 4; d <= 8; ++d) {
        for (std::uint64_t s = 0; s < 10; ++s) {
            auto inst = gen_random_instance(d, 1, 2, s * 13 + d);
            auto p = desk_params(s);
            auto h = standard_coloring(d);
            auto out = promote_conflicts(h, inst.precoloring, inst.lists, p);
            auto* pr = std::get_if<Promotion>(&out);
            if (!pr) continue;
            CHECK(is_proper(pr->phi_prime));
            for (EdgeRef e : inst.precoloring.edges()) {
                REQUIRE(pr->phi_prime.get(e) == inst.precoloring.get(e));
            }
            for (EdgeRef e : conflict_edges(h, inst.lists)) {
                REQUIRE(pr->phi_prime.has(e));
                REQUIRE_FALSE(inst.lists.forbids(e, pr->phi_prime.get(e)));
            }
            std::set<EdgeRef> dom;
            for (EdgeRef e : inst.precoloring.edges()) dom.insert(e);
            for (EdgeRef e : conflict_edges(h, inst.lists)) dom.insert(e);
            CHECK(pr->phi_prime.size() == dom.size());
            auto again = promotion_report(h, inst.precoloring, pr->phi_prime, inst.lists, p);
            CHECK(again.find(kStep2A)->pass());
            CHECK(again.find(kStep2B)->pass());
            CHECK(again.find(kStep2Proper)->pass());
        }
    }
}

TEST_CASE("promotion verdict does not depend on order when lists stay wide") {
    // Replays the greedy rule in random orders; whenever every list met along
    // the way has at least two colors, the fixed-order run must succeed too.
    for (std::uint64_t s = 0; s < 40; ++s) {
        int d = 4 + static_cast<int>(s % 3);
        auto inst = gen_random_instance(d, 1, 1, s);
        auto p = desk_params(s);
        auto h = standard_coloring(d);
        auto conflicts = conflict_edges(h, inst.lists);
        Rng rng(s);
        for (int trial = 0; trial < 10; ++trial) {
            auto order = conflicts;
            rng.shuffle(order);
            PromotionState st(h, inst.precoloring);
            bool wide = true;
            for (EdgeRef e : order) {
                ColorMask m = allowed_list(e, st, h, inst.lists, p);
                if (std::popcount(m) < 2) {
                    wide = false;
                    break;
                }
                st.promote(e, static_cast<Color>(std::countr_zero(m)));
            }
            if (wide) {
                CHECK(std::holds_alternative<Promotion>(
                    promote_conflicts(h, inst.precoloring, inst.lists, p)));
            }
        }
    }
}

// ---- step 3

TEST_CASE("eliminate_unexpected with nothing to do") {
    ParamSet p;
    auto h = standard_coloring(4);
    PartialColoring phi(4);
    phi.set({0, 0}, 0);
    auto out = eliminate_unexpected(h, phi, ListAssignment(4), p);
    REQUIRE(std::holds_alternative<SSwapResult>(out));
    CHECK(std::get<SSwapResult>(out).coloring == h);
    CHECK(std::get<SSwapResult>(out).plan.empty());
}

TEST_CASE("eliminate_unexpected removes a clash") {
    ParamSet p;
    PartialColoring phi3(3);
    phi3.set({0, 0}, 2);
    phi3.set({0, 1}, 0);
    REQUIRE(clash_edges(standard_coloring(3), phi3) == std::vector<EdgeRef>{{0, 0}});
    // at d=3 both cycles through (0, dim0) touch a blocked edge
    CHECK(std::holds_alternative<SSwapFailed>(
        eliminate_unexpected(standard_coloring(3), phi3, ListAssignment(3), p)));

    PartialColoring phi(4);
    phi.set({0, 0}, 2);
    phi.set({0, 1}, 0);
    auto h = standard_coloring(4);
    auto out = eliminate_unexpected(h, phi, ListAssignment(4), p);
    REQUIRE(std::holds_alternative<SSwapResult>(out));
    const auto& r = std::get<SSwapResult>(out);
    REQUIRE(r.plan.swaps().size() == 1);
    CHECK(r.plan.swaps()[0].cycle == cycle_at(0, 0, 3));
    CHECK(unexpected_edges(r.coloring, phi).empty());
    CHECK(is_proper(r.coloring));
    CHECK(r.report.find(kStep3A)->pass());
    CHECK(r.report.find(kStep3B)->pass());
    CHECK(r.report.find(kStep3Disjoint)->pass());
    // one cycle already puts two dim-0 edges in a window; floor((2k+e)4+1) = 1
    CHECK(r.report.failed() == std::vector<std::string>{kStep3D});
}

TEST_CASE("eliminate_unexpected fails when d=2 is blocked") {
    ParamSet p;
    PartialColoring phi(2);
    phi.set({0, 0}, 1);
    phi.set({0, 1}, 0);
    auto out = eliminate_unexpected(standard_coloring(2), phi, ListAssignment(2), p);
    REQUIRE(std::holds_alternative<SSwapFailed>(out));
    CHECK(std::get<SSwapFailed>(out).edge == EdgeRef{0, 0});
}

TEST_CASE("select_cycle_for") {
    ParamSet p;
    auto h = standard_coloring(4);
    PartialColoring phi(4);
    phi.set({0, 1}, 0);
    phi.set({1, 1}, 0);
    auto mult = request_multiplicity(h, phi);
    SwapPlan plan(4);
    // dim 1 is skipped: its cycle contains the prescribed edge (0, dim1)
    auto c = select_cycle_for({0, 0}, plan, h, phi, mult, ListAssignment(4), p);
    REQUIRE(c.has_value());
    CHECK(*c == cycle_at(0, 0, 2));

    // a clash with nothing else around takes dimension 1
    PartialColoring clash(4);
    clash.set({0, 0}, 3);
    clash.set({0, 2}, 0);
    auto m2 = request_multiplicity(h, clash);
    auto c2 = select_cycle_for({0, 0}, plan, h, clash, m2, ListAssignment(4), p);
    REQUIRE(c2.has_value());
    CHECK(*c2 == cycle_at(0, 0, 1));

    PartialColoring phi3(3);
    phi3.set({0, 1}, 0);
    phi3.set({1, 1}, 0);
    ListAssignment block(3);
    block.add({4, 0}, 2);
    auto h3 = standard_coloring(3);
    auto m3 = request_multiplicity(h3, phi3);
    CHECK_FALSE(select_cycle_for({0, 0}, SwapPlan(3), h3, phi3, m3, block, p).has_value());
}

TEST_CASE("step 3 properties on random instances") {
    int checked = 0;
    for (int d = 4; d <= 9; ++d) {
        for (std::uint64_t s = 0; s < 12; ++s) {
            auto inst = gen_random_instance(d, 1, 1, s * 7 + d, {0.03, 0.03});
            auto p = desk_params(s);
            auto h0 = standard_coloring(d);
            auto st1 = find_permutation(h0, inst.precoloring, inst.lists, p);
            auto* f = std::get_if<PermutationFound>(&st1);
            if (!f) continue;
            auto st2 = promote_conflicts(f->coloring, inst.precoloring, inst.lists, p);
            auto* pr = std::get_if<Promotion>(&st2);
            if (!pr) continue;
            auto before_unexpected = unexpected_edges(f->coloring, pr->phi_prime);
            auto st3 = eliminate_unexpected(f->coloring, pr->phi_prime, inst.lists, p);
            auto* r = std::get_if<SSwapResult>(&st3);
            if (!r) continue;
            ++checked;
            CHECK(is_proper(r->coloring));
            CHECK(unexpected_edges(r->coloring, pr->phi_prime).empty());
            std::set<EdgeRef> touched;
            for (const auto& sw : r->plan.swaps()) {
                int hits = 0;
                for (EdgeRef e : cycle_edges(sw.cycle)) {
                    REQUIRE(touched.insert(e).second);
                    hits += std::binary_search(before_unexpected.begin(),
                                               before_unexpected.end(), e);
                }
                REQUIRE(hits == 1);
            }
            CHECK(r->plan.swaps().size() == before_unexpected.size());
            for (EdgeRef e : all_edges(d)) {
                bool changed = r->coloring.get(e) != f->coloring.get(e);
                REQUIRE(changed == (touched.count(e) == 1));
            }
        }
    }
    CHECK(checked > 0);
}

// ---- step 4

TEST_CASE("build_t_config on a single prescription") {
    ParamSet p;
    auto h = standard_coloring(5);
    PartialColoring phi(5);
    phi.set({0, 0}, 3);
    SwapPlan none(5);
    TSwapState st(5, none);
    auto out = build_t_config({0, 0}, st, h, phi, ListAssignment(5), p);
    REQUIRE(std::holds_alternative<TConfig>(out));
    const auto& cfg = std::get<TConfig>(out);
    CHECK(cfg.target == EdgeRef{0, 0});
    CHECK(cfg.c1 == 0);
    CHECK(cfg.c2 == 3);
    // v1v2 and v3v4 carry c2
    CHECK(h.get(edge_from(cfg.v[1], 3)) == 3);
    CHECK(cfg.v[2] == 0);
    CHECK(cfg.v[3] == 1);
    CHECK(cfg.v[1] == bit(3));
    CHECK(cfg.v[4] == (1 | bit(3)));
    CHECK(cfg.spoke == 1);  // smallest dimension outside {0, 3}
    CHECK(cfg.pre_swap == std::array<bool, 3>{false, false, false});
    CHECK(cfg.swaps.size() == 3);
    for (EdgeRef e : cfg.edges()) CHECK(edge_distance(5, e, cfg.target) <= 2);

    auto g = h;
    execute_t_config(g, cfg, true);
    CHECK(g.get({0, 0}) == 3);
    Instance inst(5);
    inst.precoloring = phi;
    CHECK(verify_solution(inst, g).pass());
    CHECK_THROWS_AS(execute_t_config(g, cfg), Error);
    try {
        execute_t_config(g, cfg);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidConfig);
    }
}

TEST_CASE("build_t_config preconditions and blocking") {
    ParamSet p;
    auto h = standard_coloring(3);
    PartialColoring ok(3);
    ok.set({0, 0}, 0);
    SwapPlan none(3);
    TSwapState st(3, none);
    CHECK_THROWS_AS(build_t_config({0, 0}, st, h, ok, ListAssignment(3), p), Error);

    PartialColoring phi(3);
    phi.set({0, 0}, 1);
    ListAssignment l(3);
    l.add({2, 2}, 1);  // spoke at v1 forbids c2
    auto out = build_t_config({0, 0}, st, h, phi, l, p);
    REQUIRE(std::holds_alternative<NoConfig>(out));
    CHECK(std::get<NoConfig>(out).condition == 5);
    CHECK(std::get<NoConfig>(out).edge == EdgeRef{0, 0});
}

TEST_CASE("complete_extension") {
    ParamSet p;
    auto h = standard_coloring(5);
    PartialColoring done(5);
    done.set({0, 0}, 0);
    auto same = complete_extension(h, done, ListAssignment(5), SwapPlan(5), p);
    REQUIRE(std::holds_alternative<TSwapResult>(same));
    CHECK(std::get<TSwapResult>(same).coloring == h);
    CHECK(std::get<TSwapResult>(same).configs.empty());

    auto h6 = standard_coloring(6);
    PartialColoring two(6);
    two.set({0, 0}, 3);
    two.set({62, 0}, 2);
    REQUIRE(edge_distance(6, {0, 0}, {62, 0}) == 5);
    auto out = complete_extension(h6, two, ListAssignment(6), SwapPlan(6), p, true);
    REQUIRE(std::holds_alternative<TSwapResult>(out));
    const auto& r = std::get<TSwapResult>(out);
    CHECK(r.configs.size() == 2);
    CHECK(r.report.pass());
    Instance inst(6);
    inst.precoloring = two;
    CHECK(verify_solution(inst, r.coloring).pass());
    std::set<EdgeRef> seen;
    for (const auto& cfg : r.configs) {
        for (EdgeRef e : cfg.edges()) CHECK(seen.insert(e).second);
    }
}

TEST_CASE("tswap_report flags a wrong final coloring") {
    ParamSet p;
    PartialColoring phi(4);
    phi.set({0, 0}, 2);
    auto r = tswap_report(standard_coloring(4), phi, ListAssignment(4), {}, p);
    CHECK_FALSE(r.find(kStep4Extends)->pass());
    CHECK(r.find(kStep4Proper)->pass());
}
