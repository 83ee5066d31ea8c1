// OpenMP kernel: family tallies. Single-path families split the depth-first
// search into subtrees rooted at a frontier of prefixes; tuple families split
// the composition masks.

#include <cstdint>

#include "htdet/trudi.hpp"
#include "kernels/kernels.hpp"
#include "paths_walk.hpp"

namespace htdet::kernels {

namespace {

using paths::Family;
using paths::LatticePath;
using paths::StepKind;

struct Prefix {
    LatticePath path;
    int remaining;
    int height;
};

// Breadth-first expansion until there are enough independent subtrees.
std::vector<Prefix> frontier(int n, const paths::detail::WalkRules& rules, std::size_t target) {
    std::vector<Prefix> level{{LatticePath{}, 2 * n, 0}};
    while (level.size() < target) {
        std::vector<Prefix> next;
        bool grew = false;
        for (auto& s : level) {
            if (s.remaining == 0) {
                next.push_back(std::move(s));
                continue;
            }
            grew = true;
            // Same trial order and pruning as detail::walk.
            if (s.height + 1 <= s.remaining - 1) {
                Prefix t = s;
                t.path.push({StepKind::U});
                --t.remaining;
                ++t.height;
                next.push_back(std::move(t));
            }
            if (s.height >= 1) {
                bool hill = s.height == 1 && !s.path.empty() && s.path.back().kind == StepKind::U;
                if (rules.allow_hills || !hill) {
                    Prefix t = s;
                    t.path.push({StepKind::D});
                    --t.remaining;
                    --t.height;
                    next.push_back(std::move(t));
                }
            }
            if (rules.allow_h && s.remaining >= 2 && s.height <= s.remaining - 2 &&
                (s.height > 0 || rules.allow_low_h)) {
                Prefix t = s;
                t.path.push({StepKind::H});
                t.remaining -= 2;
                next.push_back(std::move(t));
            }
        }
        level = std::move(next);
        if (!grew) break;
    }
    return level;
}

paths::Tally tally_paths(paths::PathFamily family) {
    const auto rules = paths::detail::base_rules(family.tag);
    auto roots = frontier(family.n, rules, 64 * static_cast<std::size_t>(max_threads()));
    const auto count = static_cast<std::int64_t>(roots.size());
    paths::Tally total;

#pragma omp parallel
    {
        paths::Tally local;
        auto emit = [&](const LatticePath&, int sign) {
            local.cardinality += Integer(1);
            local.signed_sum += Integer(sign);
        };
        auto per_base = [&](const LatticePath& base) {
            if (!paths::detail::base_accepts(family.tag, base)) return;
            LatticePath work = base;
            paths::detail::expand_decorations(family.tag, family.n, work, emit);
        };
#pragma omp for schedule(dynamic)
        for (std::int64_t i = 0; i < count; ++i) {
            Prefix root = roots[static_cast<std::size_t>(i)];
            paths::detail::walk(root.path, root.remaining, root.height, rules, per_base);
        }
#pragma omp critical(htdet_tally)
        {
            total.cardinality += local.cardinality;
            total.signed_sum += local.signed_sum;
        }
    }
    return total;
}

paths::Tally tally_tuples(paths::PathFamily family) {
    const int n = family.n;
    const auto shape = paths::detail::tuple_shape(family.tag);
    const auto components = paths::detail::tuple_components(family.tag, n);
    const std::int64_t masks = std::int64_t{1} << (n - 1);
    paths::Tally total;

#pragma omp parallel
    {
        paths::Tally local;
        std::vector<std::size_t> index;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t mask = 0; mask < masks; ++mask) {
            auto comp = trudi::composition_from_mask(n, static_cast<std::uint64_t>(mask));
            const auto& parts = comp.parts;
            const int k = static_cast<int>(parts.size());
            bool empty = false;
            for (int p : parts) empty = empty || components[p + shape.offset].empty();
            if (empty) continue;
            const Integer sign(((n - k) % 2 == 0) ? 1 : -1);
            index.assign(k, 0);
            std::int64_t visited = 0;
            while (true) {
                ++visited;
                int i = k - 1;
                while (i >= 0 && ++index[i] == components[parts[i] + shape.offset].size()) {
                    index[i] = 0;
                    --i;
                }
                if (i < 0) break;
            }
            local.cardinality += Integer(visited);
            local.signed_sum += sign * Integer(visited);
        }
#pragma omp critical(htdet_tally_tuples)
        {
            total.cardinality += local.cardinality;
            total.signed_sum += local.signed_sum;
        }
    }
    return total;
}

}  // namespace

paths::Tally tally_parallel(paths::PathFamily family) {
    if (paths::is_tuple_family(family.tag)) return tally_tuples(family);
    return tally_paths(family);
}

}  // namespace htdet::kernels
