#include "cubext/oracle.hpp"

#include <bit>
#include <vector>

namespace cubext {

namespace {

class Backtracker {
public:
    Backtracker(const Instance& inst, std::uint64_t budget)
        : inst_(inst),
          d_(inst.d),
          budget_(budget),
          color_(edge_count(inst.d), kNoColor),
          used_(vertex_count(inst.d), 0) {}

    // false when the precoloring is itself improper
    bool seed() {
        for (EdgeRef e : inst_.precoloring.edges()) {
            const Color c = inst_.precoloring.get(e);
            if (!available(e, c)) return false;
            assign(e, c);
        }
        return true;
    }

    enum class Result { Found, Exhausted, OutOfBudget };

    Result search() {
        if (++nodes_ > budget_) return Result::OutOfBudget;
        std::size_t pick = SIZE_MAX;
        int fewest = d_ + 1;
        ColorMask pick_mask = 0;
        for (std::size_t i = 0; i < color_.size(); ++i) {
            if (color_[i] != kNoColor) continue;
            const ColorMask m = free_mask(edge_at(d_, i));
            const int n = std::popcount(m);
            if (n < fewest) {
                fewest = n;
                pick = i;
                pick_mask = m;
                if (n == 0) return Result::Exhausted;
            }
        }
        if (pick == SIZE_MAX) return Result::Found;
        const EdgeRef e = edge_at(d_, pick);
        for (ColorMask m = pick_mask; m != 0; m &= m - 1) {
            const Color c = static_cast<Color>(std::countr_zero(m));
            assign(e, c);
            const Result r = search();
            if (r != Result::Exhausted) return r;
            unassign(e, c);
        }
        return Result::Exhausted;
    }

    TotalColoring coloring() const { return TotalColoring(d_, color_); }
    std::uint64_t nodes() const { return nodes_; }

private:
    ColorMask free_mask(EdgeRef e) const {
        return full_mask(d_) & ~inst_.lists.mask(e) & ~used_[e.base] &
               ~used_[e.base ^ bit(e.dim)];
    }
    bool available(EdgeRef e, Color c) const { return (free_mask(e) >> c) & 1U; }
    void assign(EdgeRef e, Color c) {
        color_[edge_index(d_, e)] = c;
        used_[e.base] |= color_bit(c);
        used_[e.base ^ bit(e.dim)] |= color_bit(c);
    }
    void unassign(EdgeRef e, Color c) {
        color_[edge_index(d_, e)] = kNoColor;
        used_[e.base] &= ~color_bit(c);
        used_[e.base ^ bit(e.dim)] &= ~color_bit(c);
    }

    const Instance& inst_;
    int d_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Color> color_;
    std::vector<ColorMask> used_;
};

}  // namespace

OracleVerdict exact_solve(const Instance& inst, std::uint64_t budget) {
    check_dimension(inst.d);
    Backtracker bt(inst, budget);
    if (!bt.seed()) return Infeasible{0};
    switch (bt.search()) {
        case Backtracker::Result::Found:
            return Feasible{bt.coloring(), bt.nodes()};
        case Backtracker::Result::Exhausted:
            return Infeasible{bt.nodes()};
        case Backtracker::Result::OutOfBudget:
            break;
    }
    return BudgetExceeded{bt.nodes()};
}

}  // namespace cubext
