#include "cubext/cube.hpp"

#include <algorithm>
#include <deque>

namespace cubext {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NonCanonicalEdge: return "NonCanonicalEdge";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotTwoColored: return "NotTwoColored";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::CorruptTrace: return "CorruptTrace";
    case ErrorKind::ParameterWindow: return "ParameterWindow";
    case ErrorKind::IncompatibleInstance: return "IncompatibleInstance";
    }
    return "Unknown";
}

void check_dimension(int d) {
    if (d < 1 || d > kMaxDim) {
        throw Error(ErrorKind::OutOfRange,
                    "dimension " + std::to_string(d) + " outside [1, " +
                        std::to_string(kMaxDim) + "]");
    }
}

void check_edge(int d, EdgeRef e) {
    if (e.dim < 0 || e.dim >= d || e.base >= vertex_count(d)) {
        throw Error(ErrorKind::OutOfRange,
                    "edge (" + std::to_string(e.base) + ", dim " +
                        std::to_string(e.dim) + ") out of range for d=" +
                        std::to_string(d));
    }
    if (e.base & bit(e.dim)) {
        throw Error(ErrorKind::NonCanonicalEdge,
                    "edge base " + std::to_string(e.base) + " has bit " +
                        std::to_string(e.dim) + " set");
    }
}

void check_cycle(int d, const FourCycle& c) {
    if (c.dim_a < 0 || c.dim_b >= d || c.dim_a >= c.dim_b ||
        c.base >= vertex_count(d)) {
        throw Error(ErrorKind::OutOfRange, "four-cycle out of range");
    }
    if (c.base & (bit(c.dim_a) | bit(c.dim_b))) {
        throw Error(ErrorKind::NonCanonicalEdge,
                    "four-cycle base has a cycle dimension bit set");
    }
}

std::pair<Vertex, Vertex> edge_endpoints(int d, EdgeRef e) {
    check_edge(d, e);
    return {e.base, e.base ^ bit(e.dim)};
}

std::vector<EdgeRef> dimensional_matching(int d, Dim i) {
    if (i < 0 || i >= d) {
        throw Error(ErrorKind::OutOfRange, "dimension index out of range");
    }
    std::vector<EdgeRef> out;
    out.reserve(std::size_t{1} << (d - 1));
    for (Vertex v = 0; v < vertex_count(d); ++v) {
        if (!(v & bit(i))) out.push_back({v, i});
    }
    return out;
}

int edge_distance(int d, EdgeRef e1, EdgeRef e2) {
    check_edge(d, e1);
    check_edge(d, e2);
    return edge_distance_unchecked(e1, e2);
}

std::vector<EdgeRef> t_neighborhood(int d, EdgeRef e, int t) {
    check_edge(d, e);
    if (t < 0) throw Error(ErrorKind::OutOfRange, "negative radius");

    // Multi-source BFS from both endpoints, then keep every edge with an
    // endpoint inside the radius-t vertex ball.
    std::vector<int> dist(vertex_count(d), -1);
    std::deque<Vertex> queue;
    for (Vertex s : {e.base, e.base ^ bit(e.dim)}) {
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        if (dist[v] == t) continue;
        for (Dim i = 0; i < d; ++i) {
            const Vertex w = v ^ bit(i);
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }

    std::vector<EdgeRef> out;
    for (std::size_t k = 0; k < edge_count(d); ++k) {
        const EdgeRef f = edge_at(d, k);
        if (dist[f.base] >= 0 || dist[f.base ^ bit(f.dim)] >= 0) out.push_back(f);
    }
    return out;
}

std::vector<FourCycle> four_cycles_through(int d, EdgeRef e) {
    check_edge(d, e);
    std::vector<FourCycle> out;
    out.reserve(d > 0 ? d - 1 : 0);
    for (Dim j = 0; j < d; ++j) {
        if (j != e.dim) out.push_back(cycle_at(e.base, e.dim, j));
    }
    return out;
}

}  // namespace cubext
