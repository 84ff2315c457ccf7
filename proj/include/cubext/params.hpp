#pragma once

#include <cmath>
#include <cstdint>

namespace cubext {

// Neighborhood radii used by the density bounds and by the swap stages.
// The defaults are the radii of the asymptotic construction; at desk scale
// (d <= 27) every one of them saturates, so callers may shrink them
// together with scale().
struct Radii {
    int density = 27;            // alpha-dense / beta-sparse clauses, step 1 (b)
    int step1_requested = 26;    // step 1 (a)
    int color_overload = 25;     // step 2 color-overload window
    int promote_density = 12;    // step 2 (d) (e)
    int promote_requested = 11;  // step 2 (f)
    int swap_budget = 10;        // used-edge budget windows (diagnostic)
    int swap_overload = 9;       // S/T overload window around the handled edge
    int sswap_post = 3;          // step 3 (d) (e)
    int tswap_post = 2;          // step 4 per-matching touched counts

    Radii scaled(double factor) const;

    friend bool operator==(const Radii&, const Radii&) = default;
};

struct ParamSet {
    // Documented constants of the asymptotic proof. The solver does not
    // depend on them being small; user-supplied values replace them.
    // alpha = 10^-622 and beta = 2 * 10^-622 are below the double range;
    // the defaults use 1e-300 as a representable stand-in. Any value under
    // 1/d behaves identically because every bound is floor(x * d).
    static constexpr int kDefaultAlphaLog10 = -622;
    static constexpr double kDefaultAlpha = 1e-300;
    static constexpr double kDefaultGamma = 1.0 / 2048.0;  // 2^-11
    static constexpr double kDefaultKappa = 9.0 / 2048.0;  // 9 / 2^11
    static constexpr double kDefaultEpsilon = 1.0 / 8.0;   // 2^-3
    static constexpr double kDefaultEpsilon0 = 1.0 / 256.0;  // 2^-8
    static constexpr double kDefaultTau = 1.0 / 128.0;     // 2^-7

    double alpha = kDefaultAlpha;
    double beta = 2 * kDefaultAlpha;
    double gamma = kDefaultGamma;
    double kappa = kDefaultKappa;
    double epsilon = kDefaultEpsilon;
    double epsilon0 = kDefaultEpsilon0;
    double tau = kDefaultTau;
    Radii radii;

    int max_tries = 1000;        // random permutations tried in step 1
    int restarts = 4;            // outer re-seeds of step 1
    int exhaustive_max_d = 8;    // step 1 enumerates all d! permutations up to here
    int report_cap = 16;         // violations kept per bound
    int fastpath_distance = 3;   // matching separation required for the fast path
    std::uint64_t seed = 0;

    /// Throws InvalidInput when a fraction leaves (0,1) or a count is negative.
    void validate() const;

    /// alpha' = max(alpha + gamma, alpha + epsilon0).
    double alpha_prime() const {
        return alpha + (gamma > epsilon0 ? gamma : epsilon0);
    }
    /// mu = 3 kappa + epsilon + 1.
    double mu() const { return 3 * kappa + epsilon + 1; }

    friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

/// Upper bound "at most x*d" as an integer: floor(x*d).
inline long bound_floor(double x, int d) {
    return static_cast<long>(std::floor(x * d + 1e-9));
}

/// "at least x*d" for integer counts.
inline bool reaches(long count, double x, int d) {
    return static_cast<double>(count) >= x * d - 1e-9;
}

}  // namespace cubext
