#pragma once

// End-to-end solver: routes far-apart instances to the fast path, everything
// else through the four staged steps, and records a replayable trace.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cubext/coloring.hpp"
#include "cubext/fastpath.hpp"
#include "cubext/oracle.hpp"
#include "cubext/permute.hpp"
#include "cubext/promote.hpp"
#include "cubext/sswap.hpp"
#include "cubext/tswap.hpp"

namespace cubext {

enum class Mode { Auto, Staged, Fastpath, Oracle };

enum class Step { Fastpath, Permute, Promote, SSwap, TSwap, Oracle, Verify };

const char* to_string(Mode m);
const char* to_string(Step s);
Mode parse_mode(const std::string& s);  // throws InvalidInput

struct Trace {
    Mode route = Mode::Staged;  // Fastpath, Staged or Oracle
    Instance instance;
    int restart = 0;
    ColorPermutation rho;
    Promotions promotions;
    std::vector<EdgeRef> s_unexpected;
    std::vector<PlannedSwap> s_swaps;
    std::vector<TConfig> t_configs;
    std::vector<PlannedSwap> fast_swaps;
    TotalColoring coloring;

    friend bool operator==(const Trace&, const Trace&) = default;
};

using NamedReport = std::pair<std::string, BoundReport>;

struct Success {
    TotalColoring coloring;
    Trace trace;
    std::vector<NamedReport> reports;  // per step, then the final verification
};

struct Failure {
    Step step = Step::Permute;
    std::string reason;
    std::vector<NamedReport> reports;
    bool infeasible = false;  // proven by the oracle
    int restarts = 0;
};

using SolveOutcome = std::variant<Success, Failure>;

struct SolveOptions {
    Mode mode = Mode::Auto;
    bool check_each_swap = false;
    std::uint64_t oracle_budget = kDefaultOracleBudget;
};

/// Throws IncompatibleInstance when a precolor sits in its own list and
/// InvalidInput for bad parameters. Pure given the instance and options.
SolveOutcome solve(const Instance& inst, const SolveOptions& options = {});

/// Re-executes the trace from the standard coloring and returns the final
/// coloring. Throws CorruptTrace on any mismatch. With `check_each_swap`,
/// properness is checked after every swap.
TotalColoring replay(const Trace& trace, bool check_each_swap = false);

}  // namespace cubext
