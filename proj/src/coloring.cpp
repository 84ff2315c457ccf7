#include "cubext/coloring.hpp"

#include <algorithm>

namespace cubext {
namespace {

void require_same_dim(int a, int b) {
    if (a != b) {
        throw Error(ErrorKind::DimensionMismatch,
                    "dimension mismatch: " + std::to_string(a) + " vs " +
                        std::to_string(b));
    }
}

void check_color(int d, Color c) {
    if (c >= d) {
        throw Error(ErrorKind::OutOfRange,
                    "color " + std::to_string(int{c}) + " outside [0, " +
                        std::to_string(d) + ")");
    }
}

std::vector<EdgeRef> sorted(std::vector<EdgeRef> v) {
    std::sort(v.begin(), v.end());
    return v;
}

template <class ColorAt>
bool proper_by_vertex(int d, ColorAt&& color_at) {
    for (Vertex v = 0; v < vertex_count(d); ++v) {
        ColorMask seen = 0;
        for (Dim i = 0; i < d; ++i) {
            const Color c = color_at(edge_from(v, i));
            if (c == kNoColor) continue;
            check_color(d, c);
            if (seen & color_bit(c)) return false;
            seen |= color_bit(c);
        }
    }
    return true;
}

}  // namespace

std::string describe(EdgeRef e) {
    return "(" + std::to_string(e.base) + ",dim" + std::to_string(e.dim) + ")";
}

std::string describe(const FourCycle& c) {
    return "cycle(" + std::to_string(c.base) + ",dims " + std::to_string(c.dim_a) +
           "/" + std::to_string(c.dim_b) + ")";
}

PartialColoring::PartialColoring(int d) : d_(d), colors_(edge_count(d), kNoColor) {
    check_dimension(d);
}

void PartialColoring::set(EdgeRef e, Color c) {
    check_edge(d_, e);
    check_color(d_, c);
    colors_[edge_index(d_, e)] = c;
}

void PartialColoring::erase(EdgeRef e) {
    check_edge(d_, e);
    colors_[edge_index(d_, e)] = kNoColor;
}

std::vector<EdgeRef> PartialColoring::edges() const {
    std::vector<EdgeRef> out;
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] != kNoColor) out.push_back(edge_at(d_, i));
    }
    return sorted(std::move(out));
}

std::size_t PartialColoring::size() const {
    return static_cast<std::size_t>(
        std::count_if(colors_.begin(), colors_.end(),
                      [](Color c) { return c != kNoColor; }));
}

ListAssignment::ListAssignment(int d) : d_(d), masks_(edge_count(d), 0) {
    check_dimension(d);
}

void ListAssignment::set(EdgeRef e, ColorMask m) {
    check_edge(d_, e);
    if (m & ~full_mask(d_)) {
        throw Error(ErrorKind::OutOfRange, "list color outside [0, d)");
    }
    masks_[edge_index(d_, e)] = m;
}

void ListAssignment::add(EdgeRef e, Color c) {
    check_edge(d_, e);
    check_color(d_, c);
    masks_[edge_index(d_, e)] |= color_bit(c);
}

std::vector<EdgeRef> ListAssignment::edges() const {
    std::vector<EdgeRef> out;
    for (std::size_t i = 0; i < masks_.size(); ++i) {
        if (masks_[i]) out.push_back(edge_at(d_, i));
    }
    return sorted(std::move(out));
}

bool ListAssignment::empty() const {
    return std::all_of(masks_.begin(), masks_.end(), [](ColorMask m) { return m == 0; });
}

TotalColoring::TotalColoring(int d, std::vector<Color> colors)
    : d_(d), colors_(std::move(colors)) {
    check_dimension(d);
    if (colors_.size() != edge_count(d)) {
        throw Error(ErrorKind::DimensionMismatch,
                    "coloring has " + std::to_string(colors_.size()) +
                        " entries, Q_" + std::to_string(d) + " has " +
                        std::to_string(edge_count(d)) + " edges");
    }
    for (Color c : colors_) check_color(d, c);
}

bool TotalColoring::edge_with_color(Vertex v, Color c, EdgeRef& out) const {
    for (Dim i = 0; i < d_; ++i) {
        const EdgeRef e = edge_from(v, i);
        if (get(e) == c) {
            out = e;
            return true;
        }
    }
    return false;
}

bool Instance::find_incompatible(EdgeRef& out) const {
    for (std::size_t i = 0; i < edge_count(d); ++i) {
        const Color c = precoloring.at_index(i);
        if (c != kNoColor && (lists.mask_at_index(i) & color_bit(c))) {
            out = edge_at(d, i);
            return true;
        }
    }
    return false;
}

std::vector<EdgeRef> Instance::constrained_edges() const {
    std::vector<EdgeRef> out;
    for (std::size_t i = 0; i < edge_count(d); ++i) {
        if (precoloring.at_index(i) != kNoColor || lists.mask_at_index(i)) {
            out.push_back(edge_at(d, i));
        }
    }
    return sorted(std::move(out));
}

TotalColoring standard_coloring(int d) {
    check_dimension(d);
    std::vector<Color> colors(edge_count(d));
    for (std::size_t i = 0; i < colors.size(); ++i) {
        colors[i] = static_cast<Color>(i % d);
    }
    return TotalColoring(d, std::move(colors));
}

bool is_proper(const TotalColoring& c) {
    return proper_by_vertex(c.dim(), [&](EdgeRef e) { return c.get(e); });
}

bool is_proper(const PartialColoring& c) {
    return proper_by_vertex(c.dim(), [&](EdgeRef e) { return c.get(e); });
}

std::vector<int> request_multiplicity(const TotalColoring& h,
                                      const PartialColoring& phi) {
    require_same_dim(h.dim(), phi.dim());
    const int d = h.dim();
    std::vector<int> mult(edge_count(d), 0);
    for (std::size_t i = 0; i < edge_count(d); ++i) {
        const Color c = phi.at_index(i);
        if (c == kNoColor) continue;
        const EdgeRef p = edge_at(d, i);
        for (Vertex end : {p.base, p.base ^ bit(p.dim)}) {
            EdgeRef hit;
            if (h.edge_with_color(end, c, hit) && hit != p) {
                ++mult[edge_index(d, hit)];
            }
        }
    }
    return mult;
}

std::vector<EdgeRef> requested_edges(const TotalColoring& h,
                                     const PartialColoring& phi) {
    const auto mult = request_multiplicity(h, phi);
    std::vector<EdgeRef> out;
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (mult[i] > 0) out.push_back(edge_at(h.dim(), i));
    }
    return sorted(std::move(out));
}

std::vector<EdgeRef> conflict_edges(const TotalColoring& h,
                                    const ListAssignment& lists) {
    require_same_dim(h.dim(), lists.dim());
    std::vector<EdgeRef> out;
    const auto colors = h.by_index();
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (lists.mask_at_index(i) & color_bit(colors[i])) {
            out.push_back(edge_at(h.dim(), i));
        }
    }
    return sorted(std::move(out));
}

std::vector<EdgeRef> clash_edges(const TotalColoring& h, const PartialColoring& phi) {
    const auto mult = request_multiplicity(h, phi);
    std::vector<EdgeRef> out;
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (mult[i] > 0 && phi.at_index(i) != kNoColor) {
            out.push_back(edge_at(h.dim(), i));
        }
    }
    return sorted(std::move(out));
}

std::vector<EdgeRef> unexpected_edges(const TotalColoring& h,
                                      const PartialColoring& phi) {
    const auto mult = request_multiplicity(h, phi);
    std::vector<EdgeRef> out;
    for (std::size_t i = 0; i < mult.size(); ++i) {
        const bool clash = mult[i] > 0 && phi.at_index(i) != kNoColor;
        if (clash || mult[i] >= 2) out.push_back(edge_at(h.dim(), i));
    }
    return sorted(std::move(out));
}

bool is_two_colored(const TotalColoring& h, const FourCycle& cyc) {
    const auto e = cycle_edges(cyc);
    const Color a = h.get(e[0]);
    const Color b = h.get(e[1]);
    return a != b && h.get(e[2]) == a && h.get(e[3]) == b;
}

bool is_allowed_cycle(const TotalColoring& h, const ListAssignment& lists,
                      const FourCycle& cyc) {
    require_same_dim(h.dim(), lists.dim());
    check_cycle(h.dim(), cyc);
    if (!is_two_colored(h, cyc)) {
        throw Error(ErrorKind::NotTwoColored, describe(cyc) + " is not 2-colored");
    }
    const auto e = cycle_edges(cyc);
    const Color on_a = h.get(e[0]);
    const Color on_b = h.get(e[1]);
    return !lists.forbids(e[0], on_b) && !lists.forbids(e[2], on_b) &&
           !lists.forbids(e[1], on_a) && !lists.forbids(e[3], on_a);
}

void swap_in_place(TotalColoring& h, const FourCycle& cyc) {
    check_cycle(h.dim(), cyc);
    if (!is_two_colored(h, cyc)) {
        throw Error(ErrorKind::NotTwoColored, describe(cyc) + " is not 2-colored");
    }
    const auto e = cycle_edges(cyc);
    const Color on_a = h.get(e[0]);
    const Color on_b = h.get(e[1]);
    h.set(e[0], on_b);
    h.set(e[2], on_b);
    h.set(e[1], on_a);
    h.set(e[3], on_a);
}

TotalColoring apply_swap(const TotalColoring& h, const FourCycle& cyc) {
    TotalColoring out = h;
    swap_in_place(out, cyc);
    return out;
}

PlannedSwap plan_swap(const TotalColoring& h, const FourCycle& cyc) {
    const auto e = cycle_edges(cyc);
    return {cyc, h.get(e[0]), h.get(e[1])};
}

void execute_swap(TotalColoring& h, const PlannedSwap& s) {
    check_cycle(h.dim(), s.cycle);
    const auto e = cycle_edges(s.cycle);
    if (s.on_a == s.on_b || h.get(e[0]) != s.on_a || h.get(e[2]) != s.on_a ||
        h.get(e[1]) != s.on_b || h.get(e[3]) != s.on_b) {
        throw Error(ErrorKind::InvalidConfig,
                    describe(s.cycle) + " does not carry colors " +
                        std::to_string(s.on_a + 1) + "/" + std::to_string(s.on_b + 1));
    }
    h.set(e[0], s.on_b);
    h.set(e[2], s.on_b);
    h.set(e[1], s.on_a);
    h.set(e[3], s.on_a);
}

bool proper_around(const TotalColoring& h, const FourCycle& cyc) {
    const Vertex a = bit(cyc.dim_a);
    const Vertex b = bit(cyc.dim_b);
    for (Vertex v : {cyc.base, cyc.base | a, cyc.base | b, cyc.base | a | b}) {
        ColorMask seen = 0;
        for (Dim i = 0; i < h.dim(); ++i) {
            const Color c = h.get(edge_from(v, i));
            if (seen & color_bit(c)) return false;
            seen |= color_bit(c);
        }
    }
    return true;
}

std::vector<Color> matching_colors(const TotalColoring& h) {
    const int d = h.dim();
    std::vector<std::vector<long>> counts(d, std::vector<long>(d, 0));
    const auto colors = h.by_index();
    for (std::size_t i = 0; i < colors.size(); ++i) {
        ++counts[i % d][colors[i]];
    }
    std::vector<Color> out(d);
    for (Dim i = 0; i < d; ++i) {
        out[i] = static_cast<Color>(
            std::max_element(counts[i].begin(), counts[i].end()) - counts[i].begin());
    }
    return out;
}

BoundReport verify_solution(const Instance& inst, const TotalColoring& c,
                            std::size_t cap) {
    require_same_dim(inst.d, c.dim());
    const int d = inst.d;
    BoundReport report;

    auto proper = predicate_check("proper", cap);
    for (Vertex v = 0; v < vertex_count(d); ++v) {
        ColorMask seen = 0;
        bool ok = true;
        for (Dim i = 0; i < d; ++i) {
            const Color col = c.get(edge_from(v, i));
            if (seen & color_bit(col)) ok = false;
            seen |= color_bit(col);
        }
        if (!ok) proper.require(false, [&] { return "vertex " + std::to_string(v); });
    }
    if (!proper.observed_any) proper.require(true, [] { return std::string{}; });

    auto extends = predicate_check("extends precoloring", cap);
    auto avoids = predicate_check("avoids lists", cap);
    for (std::size_t i = 0; i < edge_count(d); ++i) {
        const Color col = c.by_index()[i];
        const Color want = inst.precoloring.at_index(i);
        if (want != kNoColor && want != col) {
            extends.require(false, [&] {
                return describe(edge_at(d, i)) + " has " + std::to_string(col + 1) +
                       ", precolored " + std::to_string(want + 1);
            });
        }
        if (inst.lists.mask_at_index(i) & color_bit(col)) {
            avoids.require(false, [&] {
                return describe(edge_at(d, i)) + " has listed color " +
                       std::to_string(col + 1);
            });
        }
    }
    if (!extends.observed_any) extends.require(true, [] { return std::string{}; });
    if (!avoids.observed_any) avoids.require(true, [] { return std::string{}; });

    report.checks = {std::move(proper), std::move(extends), std::move(avoids)};
    return report;
}

}  // namespace cubext
