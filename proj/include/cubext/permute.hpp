#pragma once

// Step I: relabel the colors of the starting coloring so that requested and
// conflict edges are locally scarce and every edge keeps many allowed
// four-cycles. The permutation is found by search and certified by
// evaluate_permutation.

#include <cstdint>
#include <variant>
#include <vector>

#include "cubext/coloring.hpp"
#include "cubext/params.hpp"
#include "cubext/report.hpp"

namespace cubext {

class ColorPermutation {
public:
    ColorPermutation() = default;
    /// Throws InvalidInput unless `image` is a bijection on [0, image.size()).
    explicit ColorPermutation(std::vector<Color> image);
    static ColorPermutation identity(int d);

    int dim() const { return static_cast<int>(image_.size()); }
    Color operator()(Color c) const { return image_[c]; }
    const std::vector<Color>& image() const { return image_; }
    ColorPermutation inverse() const;

    friend bool operator==(const ColorPermutation&, const ColorPermutation&) = default;

private:
    std::vector<Color> image_;
};

/// rho applied to every edge color of h.
TotalColoring permute_colors(const TotalColoring& h, const ColorPermutation& rho);

// Check names, in report order.
inline constexpr const char* kStep1A = "(a) requested per matching per neighborhood";
inline constexpr const char* kStep1B = "(b) conflicts per matching per neighborhood";
inline constexpr const char* kStep1C = "(c) requested per vertex";
inline constexpr const char* kStep1D = "(d) conflicts per vertex";
inline constexpr const char* kStep1E = "(e) allowed cycles per edge";

/// Allowed-cycle floor per edge: min(d-1, ceil((1-tau) d)).
long allowed_cycle_floor(int d, double tau);

/// With `fail_fast`, counting stops at the first violated check; the report
/// then holds partial counts.
BoundReport evaluate_permutation(const TotalColoring& h, const ColorPermutation& rho,
                                 const PartialColoring& phi,
                                 const ListAssignment& lists, const ParamSet& params,
                                 bool fail_fast = false);

struct PermutationFound {
    ColorPermutation rho;
    TotalColoring coloring;  // rho applied to h
    BoundReport report;
    long trial = 0;  // 0 = identity, then random draws, then enumeration
};

struct NoPermutationFound {
    BoundReport best;
    ColorPermutation best_rho;
    long trials = 0;
    bool exhaustive = false;  // every permutation was evaluated
};

using PermutationOutcome = std::variant<PermutationFound, NoPermutationFound>;

/// Identity first (restart 0 only), then params.max_tries seeded random
/// permutations, then, for d <= params.exhaustive_max_d on restart 0, every
/// permutation in lexicographic order.
PermutationOutcome find_permutation(const TotalColoring& h, const PartialColoring& phi,
                                    const ListAssignment& lists, const ParamSet& params,
                                    int restart = 0);

}  // namespace cubext
