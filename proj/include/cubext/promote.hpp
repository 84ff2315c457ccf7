#pragma once

// Step II: every conflict edge of the permuted coloring becomes a prescribed
// edge with a color outside its list, chosen greedily so that no vertex and
// no color gets locally overloaded.

#include <utility>
#include <variant>
#include <vector>

#include "cubext/coloring.hpp"
#include "cubext/density.hpp"
#include "cubext/params.hpp"
#include "cubext/report.hpp"

namespace cubext {

using Promotions = std::vector<std::pair<EdgeRef, Color>>;

// Evolving precoloring with exact requested-edge bookkeeping against a
// fixed total coloring.
class PromotionState {
public:
    PromotionState(const TotalColoring& h, const PartialColoring& phi);

    const PartialColoring& precoloring() const { return phi_; }
    int requested_at(Vertex v) const { return requested_at_[v]; }
    int request_multiplicity(EdgeRef e) const {
        return mult_[edge_index(phi_.dim(), e)];
    }
    const std::vector<KeyedEdge>& prescribed_by_color() const { return by_color_; }
    const Promotions& promoted() const { return promoted_; }

    /// At least epsilon0 * d requested edges at v.
    bool vertex_overloaded(Vertex v, const ParamSet& params) const;
    /// Color c on at least epsilon0 * d prescribed edges within the
    /// color-overload radius of e.
    bool color_overloaded(EdgeRef e, Color c, const ParamSet& params) const;

    void promote(EdgeRef e, Color c);

private:
    const TotalColoring* h_;
    PartialColoring phi_;
    std::vector<int> mult_;
    std::vector<int> requested_at_;
    std::vector<KeyedEdge> by_color_;
    Promotions promoted_;
};

/// Colors c with: c not listed on e; c unused by the precoloring at either
/// endpoint; c differs from h(uu') whenever neighbor u' is overloaded; c not
/// overloaded around e.
ColorMask allowed_list(EdgeRef e, const PromotionState& state, const TotalColoring& h,
                       const ListAssignment& lists, const ParamSet& params);

inline constexpr const char* kStep2A = "(a) extends the precoloring";
inline constexpr const char* kStep2B = "(b) conflict edges colored outside their lists";
inline constexpr const char* kStep2C = "(c) prescribed per vertex";
inline constexpr const char* kStep2D = "(d) prescribed per color per neighborhood";
inline constexpr const char* kStep2E = "(e) prescribed per matching per neighborhood";
inline constexpr const char* kStep2F = "(f) requested per matching per neighborhood";
inline constexpr const char* kStep2G = "(g) requested per vertex";
inline constexpr const char* kStep2Proper = "promoted precoloring proper";

/// Postconditions of the promotion, recomputed from scratch.
BoundReport promotion_report(const TotalColoring& h, const PartialColoring& phi,
                             const PartialColoring& phi_prime,
                             const ListAssignment& lists, const ParamSet& params);

struct Promotion {
    PartialColoring phi_prime;
    Promotions promoted;  // in processing order
    BoundReport report;
};

struct PromotionFailed {
    EdgeRef edge;
    ColorMask allowed = 0;
    Promotions promoted;  // progress before getting stuck
};

using PromotionOutcome = std::variant<Promotion, PromotionFailed>;

/// Conflict edges in lexicographic order, smallest allowed color each.
PromotionOutcome promote_conflicts(const TotalColoring& h, const PartialColoring& phi,
                                   const ListAssignment& lists, const ParamSet& params);

}  // namespace cubext
