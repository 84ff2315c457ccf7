#include "cubext/params.hpp"

#include <string>

#include "cubext/cube.hpp"

namespace cubext {
namespace {

int scale_one(int r, double factor) {
    return static_cast<int>(std::floor(r * factor + 1e-9));
}

void check_fraction(const char* name, double x) {
    if (!(x > 0.0 && x < 1.0)) {
        throw Error(ErrorKind::InvalidInput,
                    std::string("parameter ") + name + " must lie in (0,1), got " +
                        std::to_string(x));
    }
}

}  // namespace

Radii Radii::scaled(double factor) const {
    if (!(factor >= 0.0)) {
        throw Error(ErrorKind::InvalidInput, "radius scale must be nonnegative");
    }
    Radii r;
    r.density = scale_one(density, factor);
    r.step1_requested = scale_one(step1_requested, factor);
    r.color_overload = scale_one(color_overload, factor);
    r.promote_density = scale_one(promote_density, factor);
    r.promote_requested = scale_one(promote_requested, factor);
    r.swap_budget = scale_one(swap_budget, factor);
    r.swap_overload = scale_one(swap_overload, factor);
    r.sswap_post = scale_one(sswap_post, factor);
    r.tswap_post = scale_one(tswap_post, factor);
    return r;
}

void ParamSet::validate() const {
    check_fraction("alpha", alpha);
    check_fraction("beta", beta);
    check_fraction("gamma", gamma);
    check_fraction("kappa", kappa);
    check_fraction("epsilon", epsilon);
    check_fraction("epsilon0", epsilon0);
    check_fraction("tau", tau);
    for (int r : {radii.density, radii.step1_requested, radii.color_overload,
                  radii.promote_density, radii.promote_requested, radii.swap_budget,
                  radii.swap_overload, radii.sswap_post, radii.tswap_post}) {
        if (r < 0) throw Error(ErrorKind::InvalidInput, "radii must be nonnegative");
    }
    if (max_tries < 0 || restarts < 0 || report_cap < 0 || exhaustive_max_d < 0) {
        throw Error(ErrorKind::InvalidInput, "search budgets must be nonnegative");
    }
    if (fastpath_distance < 0) {
        throw Error(ErrorKind::InvalidInput, "fastpath distance must be nonnegative");
    }
}

}  // namespace cubext
