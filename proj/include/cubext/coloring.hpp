#pragma once

// Partial and total d-edge colorings of Q_d, forbidden-color lists, and the
// edge classifications the swap stages are built on.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cubext/cube.hpp"
#include "cubext/params.hpp"
#include "cubext/report.hpp"

namespace cubext {

using ColorMask = std::uint32_t;

inline constexpr ColorMask color_bit(Color c) { return ColorMask{1} << c; }
inline constexpr ColorMask full_mask(int d) {
    return d >= 32 ? ~ColorMask{0} : (ColorMask{1} << d) - 1;
}

class PartialColoring {
public:
    PartialColoring() = default;
    explicit PartialColoring(int d);

    int dim() const { return d_; }
    Color get(EdgeRef e) const { return colors_[edge_index(d_, e)]; }
    bool has(EdgeRef e) const { return get(e) != kNoColor; }
    /// Checked assignment; throws OutOfRange / NonCanonicalEdge.
    void set(EdgeRef e, Color c);
    void erase(EdgeRef e);

    std::span<const Color> by_index() const { return colors_; }
    Color at_index(std::size_t i) const { return colors_[i]; }

    /// Colored edges in lexicographic (base, dim) order.
    std::vector<EdgeRef> edges() const;
    std::size_t size() const;
    bool empty() const { return size() == 0; }

    friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

private:
    int d_ = 0;
    std::vector<Color> colors_;
};

class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(int d);

    int dim() const { return d_; }
    ColorMask mask(EdgeRef e) const { return masks_[edge_index(d_, e)]; }
    ColorMask mask_at_index(std::size_t i) const { return masks_[i]; }
    bool forbids(EdgeRef e, Color c) const { return (mask(e) >> c) & 1U; }
    void set(EdgeRef e, ColorMask m);
    void add(EdgeRef e, Color c);

    /// Edges with a nonempty list in lexicographic order.
    std::vector<EdgeRef> edges() const;
    bool empty() const;

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    int d_ = 0;
    std::vector<ColorMask> masks_;
};

class TotalColoring {
public:
    TotalColoring() = default;
    /// Takes colors in canonical edge-index order.
    TotalColoring(int d, std::vector<Color> colors);

    int dim() const { return d_; }
    Color get(EdgeRef e) const { return colors_[edge_index(d_, e)]; }
    void set(EdgeRef e, Color c) { colors_[edge_index(d_, e)] = c; }
    std::span<const Color> by_index() const { return colors_; }

    /// The edge at v carrying color c, if any.
    bool edge_with_color(Vertex v, Color c, EdgeRef& out) const;

    friend bool operator==(const TotalColoring&, const TotalColoring&) = default;

private:
    int d_ = 0;
    std::vector<Color> colors_;
};

struct Instance {
    int d = 0;
    PartialColoring precoloring;
    ListAssignment lists;
    ParamSet params;

    explicit Instance(int dim = 1)
        : d(dim), precoloring(dim), lists(dim) {}

    /// First precolored edge whose color sits in its own list, if any.
    bool find_incompatible(EdgeRef& out) const;
    bool compatible() const {
        EdgeRef e;
        return !find_incompatible(e);
    }
    /// Edges that are precolored or carry a nonempty list.
    std::vector<EdgeRef> constrained_edges() const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

TotalColoring standard_coloring(int d);

bool is_proper(const TotalColoring& c);
bool is_proper(const PartialColoring& c);

/// Number of prescribed edges adjacent to each edge whose precolor equals the
/// edge's current color, by edge index. Requested means >= 1.
std::vector<int> request_multiplicity(const TotalColoring& h,
                                      const PartialColoring& phi);

std::vector<EdgeRef> requested_edges(const TotalColoring& h,
                                     const PartialColoring& phi);
std::vector<EdgeRef> conflict_edges(const TotalColoring& h,
                                    const ListAssignment& lists);
std::vector<EdgeRef> clash_edges(const TotalColoring& h, const PartialColoring& phi);
std::vector<EdgeRef> unexpected_edges(const TotalColoring& h,
                                      const PartialColoring& phi);

/// Two-colored test: edges of dim_a share one color, edges of dim_b another.
bool is_two_colored(const TotalColoring& h, const FourCycle& cyc);

/// Throws NotTwoColored when the cycle does not alternate two colors.
bool is_allowed_cycle(const TotalColoring& h, const ListAssignment& lists,
                      const FourCycle& cyc);

TotalColoring apply_swap(const TotalColoring& h, const FourCycle& cyc);
void swap_in_place(TotalColoring& h, const FourCycle& cyc);

/// A swap with the colors its cycle must carry when it runs: `on_a` on the
/// two dim_a edges and `on_b` on the two dim_b edges.
struct PlannedSwap {
    FourCycle cycle;
    Color on_a = 0;
    Color on_b = 0;

    friend bool operator==(const PlannedSwap&, const PlannedSwap&) = default;
};

/// Records the cycle's current colors.
PlannedSwap plan_swap(const TotalColoring& h, const FourCycle& cyc);

/// Throws InvalidConfig unless h carries the expected colors on the cycle.
void execute_swap(TotalColoring& h, const PlannedSwap& s);

/// Local properness at the four cycle vertices.
bool proper_around(const TotalColoring& h, const FourCycle& cyc);

/// For each dimension, the color carried by most of its edges (ties go to
/// the smaller color).
std::vector<Color> matching_colors(const TotalColoring& h);

/// Properness, agreement with the precoloring, list avoidance.
BoundReport verify_solution(const Instance& inst, const TotalColoring& c,
                            std::size_t cap = 16);

std::string describe(EdgeRef e);
std::string describe(const FourCycle& c);

}  // namespace cubext
