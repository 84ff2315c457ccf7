#include <doctest.h>

#include <set>

#include "cubext/coloring.hpp"
#include "cubext/cube.hpp"
#include "support.hpp"

using namespace cubext;
using namespace testing;

TEST_CASE("edge_endpoints") {
    CHECK(edge_endpoints(3, {0, 0}) == std::pair<Vertex, Vertex>{0, 1});
    CHECK(edge_endpoints(2, {2, 0}) == std::pair<Vertex, Vertex>{2, 3});
    try {
        edge_endpoints(2, {1, 0});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonCanonicalEdge);
    }
    try {
        edge_endpoints(2, {4, 0});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OutOfRange);
    }
    try {
        edge_endpoints(2, {0, 2});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OutOfRange);
    }
}

TEST_CASE("edge index is a bijection") {
    for (int d = 1; d <= 10; ++d) {
        std::size_t n = 0;
        for (Vertex v = 0; v < vertex_count(d); ++v) {
            for (int i = 0; i < d; ++i) {
                if (v & bit(i)) continue;
                EdgeRef e{v, i};
                std::size_t k = edge_index(d, e);
                REQUIRE(k < edge_count(d));
                REQUIRE(edge_at(d, k) == e);
                ++n;
            }
        }
        CHECK(n == edge_count(d));
    }
}

TEST_CASE("dimensional_matching") {
    auto m = dimensional_matching(2, 0);
    CHECK(m == std::vector<EdgeRef>{{0, 0}, {2, 0}});
    CHECK(dimensional_matching(1, 0) == std::vector<EdgeRef>{{0, 0}});
    CHECK(dimensional_matching(4, 3).size() == 8);
    CHECK_THROWS_AS(dimensional_matching(3, 3), Error);

    for (int d = 1; d <= 12; ++d) {
        for (int i = 0; i < d; ++i) {
            auto mm = dimensional_matching(d, i);
            REQUIRE(mm.size() == (std::size_t{1} << (d - 1)));
            std::vector<int> cover(vertex_count(d), 0);
            for (EdgeRef e : mm) {
                auto [a, b] = edge_endpoints(d, e);
                ++cover[a];
                ++cover[b];
            }
            CHECK(std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; }));
        }
    }
}

TEST_CASE("edge_distance examples") {
    CHECK(edge_distance(2, {0, 0}, {0, 1}) == 0);
    CHECK(edge_distance(2, {0, 0}, {2, 0}) == 1);
    CHECK(edge_distance(3, {0, 0}, {6, 0}) == 2);
    CHECK(edge_distance(3, {0, 0}, {0, 0}) == 0);
    CHECK_THROWS_AS(edge_distance(3, {1, 0}, {0, 0}), Error);
}

TEST_CASE("edge_distance matches BFS") {
    for (int d = 1; d <= 6; ++d) {
        auto es = all_edges(d);
        for (EdgeRef a : es) {
            for (EdgeRef b : es) {
                int x = edge_distance(d, a, b);
                REQUIRE(x == bfs_edge_distance(d, a, b));
                REQUIRE(x == edge_distance(d, b, a));
            }
        }
    }
}

TEST_CASE("edge_distance triangle through shared edges") {
    // dist(a,c) <= dist(a,b) + 1 + dist(b,c): walk through edge b.
    for (int d = 2; d <= 5; ++d) {
        auto es = all_edges(d);
        for (EdgeRef a : es) {
            for (EdgeRef b : es) {
                for (EdgeRef c : es) {
                    REQUIRE(edge_distance(d, a, c) <=
                            edge_distance(d, a, b) + 1 + edge_distance(d, b, c));
                }
            }
        }
    }
}

TEST_CASE("t_neighborhood") {
    CHECK(t_neighborhood(3, {0, 0}, 0).size() == 5);
    CHECK(t_neighborhood(2, {0, 0}, 1).size() == 4);
    CHECK(t_neighborhood(3, {0, 0}, 27).size() == 12);

    for (int d = 1; d <= 6; ++d) {
        for (EdgeRef e : all_edges(d)) {
            std::size_t prev = 0;
            for (int t = 0; t <= 4; ++t) {
                std::vector<EdgeRef> brute;
                for (EdgeRef f : all_edges(d)) {
                    if (bfs_edge_distance(d, e, f) <= t) brute.push_back(f);
                }
                auto got = sorted(t_neighborhood(d, e, t));
                REQUIRE(got == sorted(brute));
                REQUIRE(std::find(got.begin(), got.end(), e) != got.end());
                REQUIRE(got.size() >= prev);
                prev = got.size();
                if (t >= d - 1) REQUIRE(got.size() == edge_count(d));
            }
        }
    }
}

TEST_CASE("four_cycles_through") {
    auto c2 = four_cycles_through(2, {0, 0});
    REQUIRE(c2.size() == 1);
    CHECK(c2[0] == FourCycle{0, 0, 1});
    CHECK(four_cycles_through(1, {0, 0}).empty());
    for (EdgeRef e : all_edges(5)) CHECK(four_cycles_through(5, e).size() == 4);

    for (int d = 2; d <= 7; ++d) {
        auto h = standard_coloring(d);
        for (EdgeRef e : all_edges(d)) {
            auto cs = four_cycles_through(d, e);
            REQUIRE(cs.size() == static_cast<std::size_t>(d - 1));
            std::set<int> others;
            for (const auto& c : cs) {
                auto ce = cycle_edges(c);
                REQUIRE(std::find(ce.begin(), ce.end(), e) != ce.end());
                // consecutive edges share a vertex and close up
                for (int k = 0; k < 4; ++k) REQUIRE(share_endpoint(ce[k], ce[(k + 1) % 4]));
                int na = 0, nb = 0;
                for (EdgeRef f : ce) {
                    na += f.dim == c.dim_a;
                    nb += f.dim == c.dim_b;
                }
                REQUIRE(na == 2);
                REQUIRE(nb == 2);
                std::set<Color> colors;
                for (EdgeRef f : ce) colors.insert(h.get(f));
                REQUIRE(colors.size() == 2);
                REQUIRE(is_two_colored(h, c));
                others.insert(c.dim_a == e.dim ? c.dim_b : c.dim_a);
            }
            REQUIRE(others.size() == static_cast<std::size_t>(d - 1));
        }
    }
}

TEST_CASE("standard_coloring") {
    auto h2 = standard_coloring(2);
    for (EdgeRef e : all_edges(2)) CHECK(h2.get(e) == e.dim);
    CHECK(standard_coloring(1).get({0, 0}) == 0);
    CHECK(is_proper(standard_coloring(6)));
    CHECK(naive_proper(standard_coloring(4)));
}
