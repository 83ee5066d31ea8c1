#pragma once

// Shared enumeration machinery for paths.cpp and the OpenMP tally kernel.

#include <cstdint>
#include <vector>

#include "htdet/paths.hpp"

namespace htdet::paths::detail {

struct WalkRules {
    bool allow_h = true;
    bool allow_low_h = true;
    bool allow_hills = true;
};

WalkRules base_rules(Family f);
/// Post-filter on completed base paths (applied where pruning is not used).
bool base_accepts(Family f, const LatticePath& path);

/// Depth-first walk over the remaining horizontal budget (in columns).
/// Order of trial steps is u, d, h.
template <class Emit>
void walk(LatticePath& path, int remaining, int height, const WalkRules& rules, Emit& emit) {
    if (remaining == 0) {
        emit(static_cast<const LatticePath&>(path));
        return;
    }
    if (height + 1 <= remaining - 1) {
        path.push({StepKind::U});
        walk(path, remaining - 1, height + 1, rules, emit);
        path.pop();
    }
    if (height >= 1) {
        bool hill = height == 1 && !path.empty() && path.back().kind == StepKind::U;
        if (rules.allow_hills || !hill) {
            path.push({StepKind::D});
            walk(path, remaining - 1, height - 1, rules, emit);
            path.pop();
        }
    }
    if (rules.allow_h && remaining >= 2 && height <= remaining - 2 && (height > 0 || rules.allow_low_h)) {
        path.push({StepKind::H});
        walk(path, remaining - 2, height, rules, emit);
        path.pop();
    }
}

template <class Emit>
void walk_base(Family f, int n, Emit& emit) {
    LatticePath path;
    auto rules = base_rules(f);
    auto filtered = [&](const LatticePath& p) {
        if (base_accepts(f, p)) emit(p);
    };
    walk(path, 2 * n, 0, rules, filtered);
}

/// Indices of return steps (h or d ending at height 0).
std::vector<std::size_t> return_positions(const LatticePath& path);
/// Indices of low h steps.
std::vector<std::size_t> low_h_positions(const LatticePath& path);
int count_short_units(const LatticePath& path);

/// Expands one base path into every decorated member of the family and calls
/// emit(path, sign) for each. `path` is modified in place and restored.
template <class Emit>
void expand_decorations(Family f, int n, LatticePath& path, Emit& emit) {
    auto parity = [n](int k) { return ((n - k) % 2 == 0) ? 1 : -1; };
    switch (f) {
        case Family::P:
        case Family::Q:
        case Family::D:
        case Family::E:
            emit(static_cast<const LatticePath&>(path), 1);
            return;
        case Family::Dprime:
            emit(static_cast<const LatticePath&>(path), parity(count_short_units(path)));
            return;
        case Family::A:
        case Family::Aprime:
        case Family::B:
        case Family::L: {
            // Free positions get every subset of marks; fixed ones are set.
            std::vector<std::size_t> free;
            int fixed_marks = 0;
            if (f == Family::B) {
                free = low_h_positions(path);
                free.pop_back();  // final step is a low h, always marked
                path[path.size() - 1].marked = true;
                fixed_marks = 1;
            } else {
                free = return_positions(path);
                if (f == Family::L) {
                    free.erase(free.begin());  // first unit stays unmarked
                } else {
                    free.pop_back();
                    path[path.size() - 1].marked = true;
                    fixed_marks = 1;
                }
            }
            const int units = static_cast<int>(return_positions(path).size());
            const std::uint64_t subsets = std::uint64_t{1} << free.size();
            for (std::uint64_t mask = 0; mask < subsets; ++mask) {
                int marks = fixed_marks;
                for (std::size_t b = 0; b < free.size(); ++b) {
                    bool on = (mask >> b) & 1U;
                    path[free[b]].marked = on;
                    marks += on ? 1 : 0;
                }
                int statistic = (f == Family::L) ? units - marks : marks;
                emit(static_cast<const LatticePath&>(path), parity(statistic));
            }
            for (auto i : free) path[i].marked = false;
            path[path.size() - 1].marked = false;
            return;
        }
        case Family::Bprime: {
            auto lows = low_h_positions(path);
            for (auto i : lows) path[i].marked = true;
            emit(static_cast<const LatticePath&>(path), parity(static_cast<int>(lows.size())));
            for (auto i : lows) path[i].marked = false;
            return;
        }
        case Family::Pstar3:
        case Family::Ptilde4: {
            const std::uint8_t colors = f == Family::Pstar3 ? 3 : 4;
            auto lows = low_h_positions(path);
            for (auto i : lows) path[i].color = 1;
            while (true) {
                emit(static_cast<const LatticePath&>(path), 1);
                std::size_t b = 0;
                while (b < lows.size() && path[lows[b]].color == colors) {
                    path[lows[b]].color = 1;
                    ++b;
                }
                if (b == lows.size()) break;
                ++path[lows[b]].color;
            }
            for (auto i : lows) path[i].color = 0;
            return;
        }
        default:
            return;
    }
}

/// Component family and length offset for tuple families: component i has
/// length part_i + offset over a composition of n.
struct TupleShape {
    Family component;
    int offset;
};
TupleShape tuple_shape(Family f);

/// components_by_length[m] = every component path of length m.
std::vector<std::vector<LatticePath>> tuple_components(Family f, int n);

void check_cap(PathFamily family, const EnumerationCaps& caps);

}  // namespace htdet::paths::detail
