#pragma once

// Integer bound checks shared by the density validators and the per-step
// postcondition reports.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cubext {

struct Violation {
    std::string witness;
    long observed = 0;
};

struct BoundCheck {
    enum class Kind { AtMost, AtLeast };

    std::string name;
    Kind kind = Kind::AtMost;
    long limit = 0;
    long worst = 0;  // max observed for AtMost, min observed for AtLeast
    bool observed_any = false;
    std::string worst_witness;
    std::vector<Violation> violations;  // first `cap` offenders, scan order
    std::size_t violation_count = 0;
    std::size_t cap = 16;
    bool stop_early = false;  // counters may quit at the first violation

    static BoundCheck at_most(std::string name, long limit, std::size_t cap = 16) {
        BoundCheck c;
        c.name = std::move(name);
        c.kind = Kind::AtMost;
        c.limit = limit;
        c.cap = cap;
        return c;
    }
    static BoundCheck at_least(std::string name, long limit, std::size_t cap = 16) {
        BoundCheck c;
        c.name = std::move(name);
        c.kind = Kind::AtLeast;
        c.limit = limit;
        c.cap = cap;
        return c;
    }

    /// Record one measured quantity; `witness` is only invoked when needed.
    template <class WitnessFn>
    void observe(long value, WitnessFn&& witness) {
        const bool worse = !observed_any ||
                           (kind == Kind::AtMost ? value > worst : value < worst);
        const bool bad = kind == Kind::AtMost ? value > limit : value < limit;
        if (worse) {
            worst = value;
            worst_witness = witness();
        }
        observed_any = true;
        if (bad) {
            ++violation_count;
            if (violations.size() < cap) {
                violations.push_back({worse ? worst_witness : witness(), value});
            }
        }
    }

    /// Boolean predicate: observed as 1/0 against "at least 1".
    template <class WitnessFn>
    void require(bool ok, WitnessFn&& witness) {
        observe(ok ? 1 : 0, std::forward<WitnessFn>(witness));
    }

    bool pass() const { return violation_count == 0; }
    bool done() const { return stop_early && violation_count > 0; }

    /// Slack against the limit; negative when violated.
    long margin() const {
        if (!observed_any) return kind == Kind::AtMost ? limit : 0;
        return kind == Kind::AtMost ? limit - worst : worst - limit;
    }
};

inline BoundCheck predicate_check(std::string name, std::size_t cap = 16) {
    auto c = BoundCheck::at_least(std::move(name), 1, cap);
    return c;
}

struct BoundReport {
    std::vector<BoundCheck> checks;

    bool pass() const {
        for (const auto& c : checks) {
            if (!c.pass()) return false;
        }
        return true;
    }
    const BoundCheck* find(const std::string& name) const {
        for (const auto& c : checks) {
            if (c.name == name) return &c;
        }
        return nullptr;
    }
    std::vector<std::string> failed() const {
        std::vector<std::string> out;
        for (const auto& c : checks) {
            if (!c.pass()) out.push_back(c.name);
        }
        return out;
    }
    std::size_t passed_count() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.pass() ? 1 : 0;
        return n;
    }
};

}  // namespace cubext
