#include "cubext/permute.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "cubext/density.hpp"
#include "cubext/random.hpp"

namespace cubext {
namespace {

// Per-dimension color when every dimensional matching is monochromatic.
bool monochromatic_dims(const TotalColoring& h, std::vector<Color>& dim_color) {
    const int d = h.dim();
    dim_color.assign(d, kNoColor);
    const auto colors = h.by_index();
    for (std::size_t i = 0; i < colors.size(); ++i) {
        Color& slot = dim_color[i % d];
        if (slot == kNoColor) {
            slot = colors[i];
        } else if (slot != colors[i]) {
            return false;
        }
    }
    return true;
}

void allowed_cycles_fast(const TotalColoring& hp, const std::vector<Color>& dim_color,
                         const ListAssignment& lists, BoundCheck& check) {
    const int d = hp.dim();
    std::vector<FourCycle> blocked;
    for (EdgeRef f : lists.edges()) {
        const ColorMask m = lists.mask(f);
        for (Dim j = 0; j < d; ++j) {
            if (j != f.dim && (m & color_bit(dim_color[j]))) {
                blocked.push_back(cycle_at(f.base, f.dim, j));
            }
        }
    }
    std::sort(blocked.begin(), blocked.end());
    blocked.erase(std::unique(blocked.begin(), blocked.end()), blocked.end());

    std::vector<std::size_t> hits;
    hits.reserve(blocked.size() * 4);
    for (const auto& c : blocked) {
        for (EdgeRef e : cycle_edges(c)) hits.push_back(edge_index(d, e));
    }
    std::sort(hits.begin(), hits.end());
    const long full = d - 1;
    for (std::size_t i = 0; i < hits.size();) {
        std::size_t j = i;
        while (j < hits.size() && hits[j] == hits[i]) ++j;
        const EdgeRef e = edge_at(d, hits[i]);
        check.observe(full - static_cast<long>(j - i), [&] { return describe(e); });
        if (check.done()) return;
        i = j;
    }
    // Edges on no blocked cycle keep all d-1.
    std::vector<std::size_t> distinct = hits;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < edge_count(d)) {
        std::size_t probe = 0;
        while (std::binary_search(distinct.begin(), distinct.end(), probe)) ++probe;
        check.observe(full, [&] { return describe(edge_at(d, probe)); });
    }
}

void allowed_cycles_general(const TotalColoring& hp, const ListAssignment& lists,
                            BoundCheck& check) {
    const int d = hp.dim();
    for (std::size_t idx = 0; idx < edge_count(d); ++idx) {
        const EdgeRef e = edge_at(d, idx);
        long allowed = 0;
        for (Dim j = 0; j < d; ++j) {
            if (j == e.dim) continue;
            const FourCycle c = cycle_at(e.base, e.dim, j);
            if (is_two_colored(hp, c) && is_allowed_cycle(hp, lists, c)) ++allowed;
        }
        check.observe(allowed, [&] { return describe(e); });
        if (check.done()) return;
    }
}

// Fail-fast reports: the first failing check in evaluation order, and how
// far it missed.
std::pair<int, long> progress(const BoundReport& r) {
    static constexpr int kOrder[] = {2, 3, 4, 0, 1};
    for (int stage = 0; stage < 5; ++stage) {
        const auto& c = r.checks[kOrder[stage]];
        if (!c.pass()) return {stage, c.margin()};
    }
    return {5, 0};
}

bool better(const BoundReport& a, const BoundReport& b) {
    return progress(a) > progress(b);
}

}  // namespace

ColorPermutation::ColorPermutation(std::vector<Color> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (Color c : image_) {
        if (c >= image_.size() || seen[c]) {
            throw Error(ErrorKind::InvalidInput, "color permutation is not a bijection");
        }
        seen[c] = true;
    }
}

ColorPermutation ColorPermutation::identity(int d) {
    std::vector<Color> image(d);
    for (int i = 0; i < d; ++i) image[i] = static_cast<Color>(i);
    return ColorPermutation(std::move(image));
}

ColorPermutation ColorPermutation::inverse() const {
    std::vector<Color> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<Color>(i);
    return ColorPermutation(std::move(inv));
}

TotalColoring permute_colors(const TotalColoring& h, const ColorPermutation& rho) {
    if (rho.dim() != h.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "permutation size differs from d");
    }
    std::vector<Color> out(h.by_index().begin(), h.by_index().end());
    for (Color& c : out) c = rho(c);
    return TotalColoring(h.dim(), std::move(out));
}

long allowed_cycle_floor(int d, double tau) {
    const long need = static_cast<long>(std::ceil((1.0 - tau) * d - 1e-9));
    return std::min<long>(d - 1, need);
}

BoundReport evaluate_permutation(const TotalColoring& h, const ColorPermutation& rho,
                                 const PartialColoring& phi,
                                 const ListAssignment& lists, const ParamSet& params,
                                 bool fail_fast) {
    const int d = h.dim();
    const TotalColoring hp = permute_colors(h, rho);
    const long limit = bound_floor(params.gamma, d);
    const std::size_t cap = static_cast<std::size_t>(params.report_cap);

    std::vector<KeyedEdge> requested;
    const auto mult = request_multiplicity(hp, phi);
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (mult[i] > 0) {
            const EdgeRef e = edge_at(d, i);
            requested.push_back({e, e.dim});
        }
    }
    std::vector<KeyedEdge> conflicts;
    for (EdgeRef e : conflict_edges(hp, lists)) conflicts.push_back({e, e.dim});

    auto a = BoundCheck::at_most(kStep1A, limit, cap);
    auto b = BoundCheck::at_most(kStep1B, limit, cap);
    auto c = BoundCheck::at_most(kStep1C, limit, cap);
    auto dd = BoundCheck::at_most(kStep1D, limit, cap);
    auto e = BoundCheck::at_least(kStep1E, allowed_cycle_floor(d, params.tau), cap);
    for (BoundCheck* x : {&a, &b, &c, &dd, &e}) x->stop_early = fail_fast;

    // cheapest first so a fail-fast run quits early
    auto run = [&]() {
        count_per_vertex(d, requested, c);
        if (fail_fast && !c.pass()) return;
        count_per_vertex(d, conflicts, dd);
        if (fail_fast && !dd.pass()) return;
        std::vector<Color> dim_color;
        if (d == 1) {
            e.observe(0, [] { return std::string("(0,dim0)"); });
        } else if (monochromatic_dims(hp, dim_color)) {
            allowed_cycles_fast(hp, dim_color, lists, e);
        } else {
            allowed_cycles_general(hp, lists, e);
        }
        if (fail_fast && !e.pass()) return;
        count_per_neighborhood(d, params.radii.step1_requested, requested, d, a, dim_label);
        if (fail_fast && !a.pass()) return;
        count_per_neighborhood(d, params.radii.density, conflicts, d, b, dim_label);
    };
    run();

    BoundReport report;
    report.checks = {std::move(a), std::move(b), std::move(c), std::move(dd),
                     std::move(e)};
    return report;
}

PermutationOutcome find_permutation(const TotalColoring& h, const PartialColoring& phi,
                                    const ListAssignment& lists, const ParamSet& params,
                                    int restart) {
    const int d = h.dim();
    NoPermutationFound failure;
    BoundReport best;
    bool have_best = false;
    long trial = 0;

    auto consider = [&](const ColorPermutation& rho) -> std::optional<PermutationFound> {
        BoundReport report = evaluate_permutation(h, rho, phi, lists, params, true);
        const long this_trial = trial++;
        if (report.pass()) {
            return PermutationFound{rho, permute_colors(h, rho),
                                    evaluate_permutation(h, rho, phi, lists, params),
                                    this_trial};
        }
        if (!have_best || better(report, best)) {
            best = std::move(report);
            failure.best_rho = rho;
            have_best = true;
        }
        return std::nullopt;
    };
    auto give_up = [&]() {
        failure.trials = trial;
        failure.best = evaluate_permutation(h, failure.best_rho, phi, lists, params);
        return failure;
    };

    if (restart == 0) {
        if (auto found = consider(ColorPermutation::identity(d))) return *found;
    } else {
        ++trial;
    }

    Rng rng(mix_seed(params.seed, static_cast<std::uint64_t>(restart)));
    std::vector<Color> image = ColorPermutation::identity(d).image();
    for (int t = 0; t < params.max_tries; ++t) {
        rng.shuffle(image);
        if (auto found = consider(ColorPermutation(image))) return *found;
    }

    if (restart == 0 && d <= params.exhaustive_max_d) {
        std::vector<Color> perm = ColorPermutation::identity(d).image();
        do {
            if (auto found = consider(ColorPermutation(perm))) return *found;
        } while (std::next_permutation(perm.begin(), perm.end()));
        failure.exhaustive = true;
    }
    return give_up();
}

}  // namespace cubext
