#include "cubext/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "cubext/random.hpp"

namespace cubext {

namespace {

constexpr Vertex kU1 = 0;
constexpr Vertex kU2 = 1;

ColorMask range_mask(int lo, int hi) {  // colors lo..hi-1
    ColorMask m = 0;
    for (int c = lo; c < hi; ++c) m |= color_bit(static_cast<Color>(c));
    return m;
}

void require_dim(int d, int lo) {
    check_dimension(d);
    if (d < lo) {
        throw Error(ErrorKind::OutOfRange, "d must be at least " + std::to_string(lo));
    }
}

Color pick_bit(Rng& rng, ColorMask m) {
    auto k = rng.below(static_cast<std::uint64_t>(std::popcount(m)));
    while (k--) m &= m - 1;
    return static_cast<Color>(std::countr_zero(m));
}

}  // namespace

Instance gen_unextendable_precoloring(int d) {
    require_dim(d, 2);
    const int hi = (d + 1) / 2;
    Instance inst(d);
    for (int j = 0; j < hi; ++j) {
        inst.precoloring.set(edge_from(kU1, 1 + j), static_cast<Color>(j));
    }
    for (int j = 0; j < d / 2; ++j) {
        inst.precoloring.set(edge_from(kU2, 1 + j), static_cast<Color>(hi + j));
    }
    return inst;
}

Instance gen_unavoidable_lists(int d) {
    require_dim(d, 2);
    const int hi = (d + 1) / 2;
    Instance inst(d);
    for (int j = 0; j < hi; ++j) {
        inst.lists.set(edge_from(kU1, 1 + j), range_mask(0, hi));
        inst.lists.set(edge_from(kU2, 1 + j), range_mask(hi, d));
    }
    return inst;
}

Instance gen_combined_counts(int d, int a, int b) {
    require_dim(d, 2);
    if (a < 1 || b < 1 || a + b > d - 1 || d - a - b > b || b > d - b + 1) {
        throw Error(ErrorKind::ParameterWindow,
                    "a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                        " outside the window for d=" + std::to_string(d));
    }
    Instance inst(d);
    for (int j = 0; j < a; ++j) {
        inst.precoloring.set(edge_from(kU1, 1 + j), static_cast<Color>(d - a + j));
        inst.precoloring.set(edge_from(kU2, 1 + j), static_cast<Color>(j));
    }
    for (int j = 0; j < b; ++j) {
        inst.lists.set(edge_from(kU1, 1 + a + j), range_mask(0, b));
        inst.lists.set(edge_from(kU2, 1 + a + j), range_mask(d - b, d));
    }
    return inst;
}

Instance gen_combined(int d, double alpha, double beta) {
    const double ad = alpha * d;
    const double bd = beta * d;
    const long a = std::lround(ad);
    const long b = std::lround(bd);
    if (std::abs(ad - a) > 1e-6 || std::abs(bd - b) > 1e-6) {
        throw Error(ErrorKind::ParameterWindow, "alpha*d and beta*d must be integers");
    }
    return gen_combined_counts(d, static_cast<int>(a), static_cast<int>(b));
}

Instance gen_random_instance(int d, int precolor_cap, int list_cap, std::uint64_t seed,
                             const RandomOptions& options) {
    check_dimension(d);
    if (precolor_cap < 0 || list_cap < 0) {
        throw Error(ErrorKind::InvalidInput, "caps must be nonnegative");
    }
    Instance inst(d);
    Rng rng(seed);
    const std::size_t m = edge_count(d);

    if (precolor_cap > 0) {
        std::vector<std::size_t> order(m);
        for (std::size_t i = 0; i < m; ++i) order[i] = i;
        rng.shuffle(order);
        std::vector<int> count(vertex_count(d), 0);
        std::vector<ColorMask> used(vertex_count(d), 0);
        for (std::size_t i : order) {
            if (rng.unit() >= options.precolor_prob) continue;
            const EdgeRef e = edge_at(d, i);
            const Vertex u = e.base, v = e.base ^ bit(e.dim);
            if (count[u] >= precolor_cap || count[v] >= precolor_cap) continue;
            const ColorMask free = full_mask(d) & ~used[u] & ~used[v];
            if (free == 0) continue;
            const Color c = pick_bit(rng, free);
            inst.precoloring.set(e, c);
            ++count[u];
            ++count[v];
            used[u] |= color_bit(c);
            used[v] |= color_bit(c);
        }
    }

    const int size_cap = std::min(list_cap, d - 1);
    if (size_cap > 0) {
        for (std::size_t i = 0; i < m; ++i) {
            if (rng.unit() >= options.list_prob) continue;
            const EdgeRef e = edge_at(d, i);
            ColorMask pool = full_mask(d);
            if (inst.precoloring.has(e)) pool &= ~color_bit(inst.precoloring.get(e));
            const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(size_cap)));
            ColorMask list = 0;
            for (int k = 0; k < size && pool; ++k) {
                const Color c = pick_bit(rng, pool);
                list |= color_bit(c);
                pool &= ~color_bit(c);
            }
            inst.lists.set(e, list);
        }
    }
    return inst;
}

Instance gen_matching_instance(int d, std::uint64_t seed, const MatchingOptions& options) {
    check_dimension(d);
    Instance inst(d);
    Rng rng(seed);
    int target = options.max_edges;
    if (target <= 0) {
        target = std::max<int>(1, static_cast<int>(vertex_count(d) / (d * d)));
    }
    target = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(target)));

    std::vector<EdgeRef> chosen;
    const int attempts = 8 * target;
    for (int k = 0; k < attempts && static_cast<int>(chosen.size()) < target; ++k) {
        const EdgeRef e = edge_at(d, rng.below(edge_count(d)));
        bool ok = true;
        for (EdgeRef f : chosen) {
            if (e == f || edge_distance_unchecked(e, f) < options.separation) {
                ok = false;
                break;
            }
            if (edge_distance_unchecked(e, f) == 0) {
                const Vertex a = e.base, b = a ^ bit(e.dim);
                const Vertex c = f.base, g = c ^ bit(f.dim);
                if (a == c || a == g || b == c || b == g) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) chosen.push_back(e);
    }

    for (EdgeRef e : chosen) {
        const auto kind = rng.below(3);  // 0 precolor, 1 list, 2 both
        Color pre = kNoColor;
        if (kind != 1) {
            pre = static_cast<Color>(rng.below(static_cast<std::uint64_t>(d)));
            inst.precoloring.set(e, pre);
        }
        if (kind != 0 && d > 1) {
            ColorMask pool = full_mask(d);
            if (pre != kNoColor) pool &= ~color_bit(pre);
            const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d - 1)));
            ColorMask list = 0;
            for (int k = 0; k < size && pool; ++k) {
                const Color c = pick_bit(rng, pool);
                list |= color_bit(c);
                pool &= ~color_bit(c);
            }
            inst.lists.set(e, list);
        }
    }
    return inst;
}

}  // namespace cubext
