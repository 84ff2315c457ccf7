#pragma once

// Exact decision procedure for small cubes: does the precoloring extend to a
// proper d-edge coloring avoiding the lists?

#include <cstdint>
#include <variant>

#include "cubext/coloring.hpp"

namespace cubext {

struct Feasible {
    TotalColoring coloring;
    std::uint64_t nodes = 0;
};

struct Infeasible {
    std::uint64_t nodes = 0;
};

struct BudgetExceeded {
    std::uint64_t nodes = 0;
};

using OracleVerdict = std::variant<Feasible, Infeasible, BudgetExceeded>;

inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

/// Backtracking on the edge with the fewest available colors, colors tried in
/// increasing order. Deterministic.
OracleVerdict exact_solve(const Instance& inst,
                          std::uint64_t budget = kDefaultOracleBudget);

}  // namespace cubext
