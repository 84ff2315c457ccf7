#pragma once

// Step III: one allowed four-cycle per unexpected edge, pairwise disjoint,
// swapped all at once so no prescribed edge stays requested and no requested
// edge answers two prescriptions.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cubext/coloring.hpp"
#include "cubext/density.hpp"
#include "cubext/params.hpp"
#include "cubext/report.hpp"

namespace cubext {

class SwapPlan {
public:
    explicit SwapPlan(int d = 1);

    const std::vector<PlannedSwap>& swaps() const { return swaps_; }
    const std::vector<EdgeRef>& unexpected() const { return handled_; }
    bool used(EdgeRef e) const { return used_[edge_index(d_, e)] != 0; }
    int used_at(Vertex v) const { return used_at_[v]; }
    const std::vector<KeyedEdge>& used_by_dim() const { return used_by_dim_; }
    bool empty() const { return swaps_.empty(); }

    /// At least epsilon * d used edges at v.
    bool vertex_overloaded(Vertex v, const ParamSet& params) const;
    /// At least epsilon * d used edges of dimension j within the overload
    /// radius of `center`.
    bool matching_overloaded(EdgeRef center, Dim j, const ParamSet& params) const;

    void add(EdgeRef unexpected_edge, const PlannedSwap& s);

private:
    int d_;
    std::vector<PlannedSwap> swaps_;
    std::vector<EdgeRef> handled_;
    std::vector<std::uint8_t> used_;
    std::vector<int> used_at_;
    std::vector<KeyedEdge> used_by_dim_;
};

/// Scans second dimensions in increasing order for an allowed cycle through
/// e whose far vertices and matching are not overloaded and whose other three
/// edges are neither prescribed, requested, nor used. Null when none.
std::optional<FourCycle> select_cycle_for(EdgeRef e, const SwapPlan& plan,
                                          const TotalColoring& h,
                                          const PartialColoring& phi_prime,
                                          const std::vector<int>& request_mult,
                                          const ListAssignment& lists,
                                          const ParamSet& params);

inline constexpr const char* kStep3A = "(a) no clash edges";
inline constexpr const char* kStep3B = "(b) requested edges answer one prescription";
inline constexpr const char* kStep3C = "(c) swapped edges per vertex";
inline constexpr const char* kStep3D = "(d) swapped edges per matching per neighborhood";
inline constexpr const char* kStep3E = "(e) requested per matching per neighborhood";
inline constexpr const char* kStep3F = "(f) requested per vertex";
inline constexpr const char* kStep3Disjoint = "cycles disjoint, one unexpected edge each";

BoundReport sswap_report(const TotalColoring& h_before, const TotalColoring& h_after,
                         const PartialColoring& phi_prime, const SwapPlan& plan,
                         const ParamSet& params);

struct SSwapResult {
    TotalColoring coloring;
    SwapPlan plan;
    BoundReport report;
};

struct SSwapFailed {
    EdgeRef edge;
    SwapPlan plan;  // cycles chosen before getting stuck
};

using SSwapOutcome = std::variant<SSwapResult, SSwapFailed>;

SSwapOutcome eliminate_unexpected(const TotalColoring& h,
                                  const PartialColoring& phi_prime,
                                  const ListAssignment& lists, const ParamSet& params);

}  // namespace cubext
