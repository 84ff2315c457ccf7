#pragma once

// Step IV: route every prescribed color onto its edge through a fourteen
// vertex configuration around it, built from up to six swaps.

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cubext/coloring.hpp"
#include "cubext/density.hpp"
#include "cubext/params.hpp"
#include "cubext/report.hpp"
#include "cubext/sswap.hpp"

namespace cubext {

inline constexpr Vertex kNoVertex = ~Vertex{0};

// Pre-swap slots, in execution order.
enum TGadget { kGadget56 = 0, kGadget67 = 1, kGadget78 = 2 };

struct TConfig {
    EdgeRef target;                // v2v3
    std::array<Vertex, 15> v{};    // v[1]..v[14]; kNoVertex when not used
    Dim spoke = 0;                 // dimension of v1v5, v2v6, v3v7, v4v8
    Color c1 = kNoColor;           // color of the target before
    Color c2 = kNoColor;           // its prescribed color
    Color c3 = kNoColor;           // spoke color
    std::array<Color, 3> pre_color{kNoColor, kNoColor, kNoColor};  // c4, c5, c6
    std::array<bool, 3> pre_swap{};
    std::array<Color, 3> matching_color{kNoColor, kNoColor, kNoColor};
    std::vector<PlannedSwap> swaps;  // execution order

    /// Union of the edges of all swapped cycles, lexicographic.
    std::vector<EdgeRef> edges() const;

    friend bool operator==(const TConfig&, const TConfig&) = default;
};

// Edges already used by executed configurations, plus the step III plan.
class TSwapState {
public:
    TSwapState(int d, const SwapPlan& s_plan);

    const SwapPlan& s_plan() const { return *s_plan_; }
    bool used(EdgeRef e) const { return used_[edge_index(d_, e)] != 0; }
    int used_at(Vertex v) const { return used_at_[v]; }
    const std::vector<KeyedEdge>& used_by_dim() const { return used_by_dim_; }

    /// At least epsilon * d T-used edges at v.
    bool vertex_overloaded(Vertex v, const ParamSet& params) const;
    /// At least epsilon * d T-used edges of dimension j near `center`.
    bool matching_overloaded(EdgeRef center, Dim j, const ParamSet& params) const;

    void add(const TConfig& cfg);

private:
    int d_;
    const SwapPlan* s_plan_;
    std::vector<std::uint8_t> used_;
    std::vector<int> used_at_;
    std::vector<KeyedEdge> used_by_dim_;
};

/// Requested under h: some adjacent prescribed edge wants h(e).
bool is_requested(const TotalColoring& h, const PartialColoring& phi, EdgeRef e);

// Condition numbers reported by NoConfig. 10 is the replay of the swap
// sequence on a scratch copy.
inline constexpr int kCondReplay = 10;

struct NoConfig {
    EdgeRef edge;
    int condition = 0;  // deepest condition reached over all spoke choices
};

using TConfigOutcome = std::variant<TConfig, NoConfig>;

/// Spoke dimensions are scanned in increasing order; the first one passing
/// conditions (1)..(9) and the replay wins. Throws InvalidConfig when the
/// target is already correct.
TConfigOutcome build_t_config(EdgeRef e, const TSwapState& state, const TotalColoring& h,
                              const PartialColoring& phi_prime,
                              const ListAssignment& lists, const ParamSet& params,
                              const std::vector<Color>& matching_color = {});

/// Runs the recorded swaps. Throws InvalidConfig if a cycle does not carry its
/// recorded colors, and when `check_each` is set, if properness breaks.
void execute_t_config(TotalColoring& h, const TConfig& cfg, bool check_each = false);

inline constexpr const char* kStep4Disjoint = "configurations edge-disjoint";
inline constexpr const char* kStep4Vertex = "touched edges per vertex";
inline constexpr const char* kStep4Matching = "touched edges per matching per neighborhood";
inline constexpr const char* kStep4Proper = "final coloring proper";
inline constexpr const char* kStep4Extends = "final coloring extends the precoloring";
inline constexpr const char* kStep4Avoids = "final coloring avoids the lists";

BoundReport tswap_report(const TotalColoring& h_final, const PartialColoring& phi_prime,
                         const ListAssignment& lists, const std::vector<TConfig>& configs,
                         const ParamSet& params);

struct TSwapResult {
    TotalColoring coloring;
    std::vector<TConfig> configs;
    BoundReport report;
};

struct TSwapFailed {
    std::vector<NoConfig> stuck;  // every prescribed edge without a config
    std::vector<TConfig> configs;
};

using TSwapOutcome = std::variant<TSwapResult, TSwapFailed>;

TSwapOutcome complete_extension(const TotalColoring& h, const PartialColoring& phi_prime,
                                const ListAssignment& lists, const SwapPlan& s_plan,
                                const ParamSet& params, bool check_each = false);

}  // namespace cubext
