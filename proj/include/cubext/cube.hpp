#pragma once

// Hypercube Q_d structure. Vertices are d-bit integers; an edge is a
// (base vertex, dimension) pair with the dimension bit of the base clear.
// Nothing is materialized: adjacency is XOR arithmetic.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubext {

using Vertex = std::uint32_t;
using Dim = int;
using Color = std::uint8_t;

inline constexpr Color kNoColor = 0xFF;
inline constexpr int kMaxDim = 20;

enum class ErrorKind {
    NonCanonicalEdge,
    OutOfRange,
    DimensionMismatch,
    NotTwoColored,
    InvalidConfig,
    InvalidInput,
    CorruptTrace,
    ParameterWindow,
    IncompatibleInstance,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct EdgeRef {
    Vertex base = 0;
    Dim dim = 0;

    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

struct FourCycle {
    Vertex base = 0;  // bits dim_a and dim_b clear
    Dim dim_a = 0;    // dim_a < dim_b
    Dim dim_b = 1;

    friend auto operator<=>(const FourCycle&, const FourCycle&) = default;
};

inline constexpr Vertex bit(Dim i) { return Vertex{1} << i; }

inline int hamming(Vertex a, Vertex b) { return std::popcount(a ^ b); }

/// Number of edges of Q_d, d * 2^(d-1).
inline std::size_t edge_count(int d) {
    return static_cast<std::size_t>(d) << (d - 1);
}

inline std::size_t vertex_count(int d) { return std::size_t{1} << d; }

/// Throws OutOfRange unless 1 <= d <= kMaxDim.
void check_dimension(int d);

/// Throws NonCanonicalEdge / OutOfRange for malformed edges.
void check_edge(int d, EdgeRef e);

/// Canonical edge index: rank(base among dim-clear vertices) * d + dim.
/// This is the array layout of every per-edge table and of the coloring
/// file format.
inline std::size_t edge_index(int d, EdgeRef e) {
    const Vertex low = e.base & (bit(e.dim) - 1);
    const Vertex rank = ((e.base >> (e.dim + 1)) << e.dim) | low;
    return static_cast<std::size_t>(rank) * d + e.dim;
}

inline EdgeRef edge_at(int d, std::size_t index) {
    const Dim dim = static_cast<Dim>(index % d);
    const Vertex rank = static_cast<Vertex>(index / d);
    const Vertex low = rank & (bit(dim) - 1);
    const Vertex high = (rank >> dim) << (dim + 1);
    return {high | low, dim};
}

/// The edge at vertex v in dimension i, in canonical form.
inline EdgeRef edge_from(Vertex v, Dim i) { return {v & ~bit(i), i}; }

inline Vertex other_end(EdgeRef e, Vertex v) { return v ^ bit(e.dim); }

std::pair<Vertex, Vertex> edge_endpoints(int d, EdgeRef e);

/// All edges of dimension i, ordered by base.
std::vector<EdgeRef> dimensional_matching(int d, Dim i);

/// Shortest path length between an endpoint of e1 and an endpoint of e2.
/// Unchecked variant for inner loops.
inline int edge_distance_unchecked(EdgeRef e1, EdgeRef e2) {
    return std::popcount((e1.base ^ e2.base) & ~(bit(e1.dim) | bit(e2.dim)));
}

int edge_distance(int d, EdgeRef e1, EdgeRef e2);

/// Every edge within edge distance t of e, including e, in index order.
std::vector<EdgeRef> t_neighborhood(int d, EdgeRef e, int t);

/// True when every t-neighborhood of Q_d is the whole edge set.
inline bool neighborhood_saturates(int d, int t) { return t >= d - 1; }

/// The d-1 four-cycles through e, one per second dimension, ascending.
std::vector<FourCycle> four_cycles_through(int d, EdgeRef e);

/// Canonical cycle spanned by dimensions i != j at vertex v.
inline FourCycle cycle_at(Vertex v, Dim i, Dim j) {
    if (i > j) std::swap(i, j);
    return {v & ~(bit(i) | bit(j)), i, j};
}

void check_cycle(int d, const FourCycle& c);

/// Edges in traversal order base -> +a -> +a+b -> +b -> base:
/// (base,a), (base+a,b), (base+b,a), (base,b).
inline std::array<EdgeRef, 4> cycle_edges(const FourCycle& c) {
    return {EdgeRef{c.base, c.dim_a}, EdgeRef{c.base | bit(c.dim_a), c.dim_b},
            EdgeRef{c.base | bit(c.dim_b), c.dim_a}, EdgeRef{c.base, c.dim_b}};
}

}  // namespace cubext
