#pragma once

// Shared helpers for the test binaries: small-scale parameters, naive
// reference implementations, and a brute-force enumeration oracle.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

#include "cubext/coloring.hpp"
#include "cubext/cube.hpp"
#include "cubext/params.hpp"

namespace testing {

using namespace cubext;

// Constants loose enough that the staged steps have something to work with
// at d <= 12, radii shrunk by a tenth.
inline ParamSet desk_params(std::uint64_t seed = 0) {
    ParamSet p;
    p.gamma = p.kappa = p.epsilon = p.epsilon0 = p.tau = 0.5;
    p.radii = p.radii.scaled(0.1);
    p.max_tries = 100;
    p.restarts = 2;
    p.exhaustive_max_d = 6;
    p.seed = seed;
    return p;
}

inline std::vector<EdgeRef> all_edges(int d) {
    std::vector<EdgeRef> out;
    for (std::size_t i = 0; i < edge_count(d); ++i) out.push_back(edge_at(d, i));
    return out;
}

// BFS over Q_d built from neighbor flips, independent of popcount.
inline std::vector<int> bfs_from(int d, Vertex src) {
    std::vector<int> dist(vertex_count(d), -1);
    std::deque<Vertex> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        for (int i = 0; i < d; ++i) {
            Vertex w = v ^ (Vertex{1} << i);
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    return dist;
}

inline int bfs_edge_distance(int d, EdgeRef a, EdgeRef b) {
    Vertex a0 = a.base, a1 = a.base ^ (Vertex{1} << a.dim);
    Vertex b0 = b.base, b1 = b.base ^ (Vertex{1} << b.dim);
    auto d0 = bfs_from(d, a0);
    auto d1 = bfs_from(d, a1);
    return std::min({d0[b0], d0[b1], d1[b0], d1[b1]});
}

inline bool share_endpoint(EdgeRef a, EdgeRef b) {
    Vertex a0 = a.base, a1 = a.base ^ (Vertex{1} << a.dim);
    Vertex b0 = b.base, b1 = b.base ^ (Vertex{1} << b.dim);
    return a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1;
}

inline bool adjacent(EdgeRef a, EdgeRef b) { return a != b && share_endpoint(a, b); }

// Naive classifiers: plain double loops over the edge set.
inline int naive_request_count(const TotalColoring& h, const PartialColoring& phi,
                               EdgeRef e) {
    int n = 0;
    for (EdgeRef f : all_edges(h.dim())) {
        if (adjacent(e, f) && phi.has(f) && phi.get(f) == h.get(e)) ++n;
    }
    return n;
}

inline std::vector<EdgeRef> naive_requested(const TotalColoring& h,
                                            const PartialColoring& phi) {
    std::vector<EdgeRef> out;
    for (EdgeRef e : all_edges(h.dim())) {
        if (naive_request_count(h, phi, e) > 0) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<EdgeRef> naive_conflicts(const TotalColoring& h,
                                            const ListAssignment& l) {
    std::vector<EdgeRef> out;
    for (EdgeRef e : all_edges(h.dim())) {
        if ((l.mask(e) >> h.get(e)) & 1U) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<EdgeRef> naive_clash(const TotalColoring& h,
                                        const PartialColoring& phi) {
    std::vector<EdgeRef> out;
    for (EdgeRef e : all_edges(h.dim())) {
        if (phi.has(e) && naive_request_count(h, phi, e) > 0) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<EdgeRef> naive_unexpected(const TotalColoring& h,
                                             const PartialColoring& phi) {
    std::vector<EdgeRef> out;
    for (EdgeRef e : all_edges(h.dim())) {
        int n = naive_request_count(h, phi, e);
        if ((phi.has(e) && n > 0) || n >= 2) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool naive_proper(const TotalColoring& h) {
    auto es = all_edges(h.dim());
    for (EdgeRef a : es) {
        for (EdgeRef b : es) {
            if (adjacent(a, b) && h.get(a) == h.get(b)) return false;
        }
    }
    return true;
}

inline std::vector<EdgeRef> sorted(std::vector<EdgeRef> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Every proper d-edge coloring of Q_d by plain odometer enumeration over
// d^(edges) assignments. Only for d <= 3.
inline std::vector<TotalColoring> enumerate_proper_colorings(int d) {
    const std::size_t m = edge_count(d);
    std::vector<Color> cur(m, 0);
    std::vector<TotalColoring> out;
    while (true) {
        TotalColoring h(d, cur);
        bool ok = true;
        for (Vertex v = 0; v < vertex_count(d) && ok; ++v) {
            std::uint32_t seen = 0;
            for (int i = 0; i < d; ++i) {
                std::uint32_t b = 1U << h.get(edge_from(v, i));
                if (seen & b) {
                    ok = false;
                    break;
                }
                seen |= b;
            }
        }
        if (ok) out.push_back(h);
        std::size_t k = 0;
        while (k < m && ++cur[k] == d) cur[k++] = 0;
        if (k == m) break;
    }
    return out;
}

inline bool dumb_feasible(const Instance& inst, const std::vector<TotalColoring>& all) {
    for (const auto& h : all) {
        bool ok = true;
        for (EdgeRef e : all_edges(inst.d)) {
            Color c = h.get(e);
            if (inst.precoloring.has(e) && inst.precoloring.get(e) != c) ok = false;
            if ((inst.lists.mask(e) >> c) & 1U) ok = false;
            if (!ok) break;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace testing
