#include "htdet/paths.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <string>

#include "htdet/trudi.hpp"
#include "kernels/kernels.hpp"
#include "paths_walk.hpp"

namespace htdet::paths {

namespace {

constexpr std::array<std::string_view, 15> family_names = {
    "P", "Q", "D", "E", "A", "Aprime", "B", "Bprime", "Dprime", "L", "Pstar3", "Ptilde4", "Jtuple", "Mtuple", "Ttuple",
};

}  // namespace

LatticePath LatticePath::parse(std::string_view text) {
    std::vector<Step> steps;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        Step s;
        switch (token[0]) {
            case 'u': s.kind = StepKind::U; break;
            case 'd': s.kind = StepKind::D; break;
            case 'h': s.kind = StepKind::H; break;
            default: throw std::invalid_argument("bad step token '" + token + "'");
        }
        std::size_t i = 1;
        if (i < token.size() && token[i] == '\'') {
            s.marked = true;
            ++i;
        }
        if (i < token.size()) {
            if (token[i] != ':' || i + 1 >= token.size()) {
                throw std::invalid_argument("bad step token '" + token + "'");
            }
            int color = std::stoi(token.substr(i + 1));
            if (color < 1 || color > 255) throw std::invalid_argument("bad colour in '" + token + "'");
            s.color = static_cast<std::uint8_t>(color);
        }
        steps.push_back(s);
    }
    return LatticePath(std::move(steps));
}

std::string LatticePath::to_string() const {
    std::string out;
    for (const auto& s : steps_) {
        if (!out.empty()) out += ' ';
        out += s.kind == StepKind::U ? 'u' : s.kind == StepKind::D ? 'd' : 'h';
        if (s.marked) out += '\'';
        if (s.color != 0) out += ":" + std::to_string(s.color);
    }
    return out;
}

int LatticePath::length() const {
    int len = 0;
    for (const auto& s : steps_) len += s.kind == StepKind::D ? 0 : 1;
    return len;
}

std::vector<int> LatticePath::heights() const {
    std::vector<int> h(steps_.size() + 1, 0);
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        int delta = steps_[i].kind == StepKind::U ? 1 : steps_[i].kind == StepKind::D ? -1 : 0;
        h[i + 1] = h[i] + delta;
    }
    return h;
}

bool LatticePath::is_valid() const {
    auto h = heights();
    return std::all_of(h.begin(), h.end(), [](int v) { return v >= 0; }) && h.back() == 0;
}

std::string_view family_name(Family f) { return family_names[static_cast<std::size_t>(f)]; }

std::optional<Family> parse_family(std::string_view name) {
    for (std::size_t i = 0; i < family_names.size(); ++i) {
        if (family_names[i] == name) return static_cast<Family>(i);
    }
    return std::nullopt;
}

bool is_tuple_family(Family f) {
    return f == Family::Jtuple || f == Family::Mtuple || f == Family::Ttuple;
}

bool is_plain_family(Family f) {
    return f == Family::P || f == Family::Q || f == Family::D || f == Family::E || f == Family::Dprime;
}

PathStats stats(const LatticePath& path) {
    PathStats st;
    auto h = path.heights();
    std::size_t unit_begin = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Step& s = path[i];
        if (s.kind == StepKind::H && h[i] == 0) {
            ++st.low_h;
            if (s.marked) ++st.marked_low_h;
        }
        if (s.kind == StepKind::U && h[i + 1] == 1 && i + 1 < path.size() && path[i + 1].kind == StepKind::D) {
            ++st.peaks_h1;
        }
        if (s.kind == StepKind::D && i + 1 < path.size() && path[i + 1].kind == StepKind::U && h[i + 1] == 1) {
            ++st.special_valleys;
        }
        if (s.kind != StepKind::U && h[i + 1] == 0) {
            ++st.returns;
            if (s.marked) ++st.marked_returns;
            st.units.push_back({unit_begin, i + 1});
            if (i + 1 - unit_begin == 2 && path[unit_begin].kind == StepKind::U) ++st.short_units;
            unit_begin = i + 1;
        }
    }
    st.primitive = st.returns <= 1;
    return st;
}

namespace detail {

WalkRules base_rules(Family f) {
    switch (f) {
        case Family::Q:
        case Family::Aprime:
            return {true, false, true};
        case Family::D:
        case Family::Dprime:
            return {false, false, true};
        case Family::E:
        case Family::L:
            return {false, false, false};
        default:
            return {true, true, true};
    }
}

bool base_accepts(Family f, const LatticePath& path) {
    switch (f) {
        case Family::Dprime: {
            std::size_t k = path.size();
            if (k < 2 || path[k - 2].kind != StepKind::U || path[k - 1].kind != StepKind::D) return false;
            // The u must start on the axis for ud to be a whole unit.
            int height = 0;
            for (std::size_t i = 0; i + 2 < k; ++i) height += path[i].kind == StepKind::U ? 1 : -1;
            return height == 0;
        }
        case Family::B:
        case Family::Bprime:
            return !path.empty() && path.back().kind == StepKind::H;
        default:
            return true;
    }
}

std::vector<std::size_t> return_positions(const LatticePath& path) {
    std::vector<std::size_t> out;
    int height = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        auto k = path[i].kind;
        height += k == StepKind::U ? 1 : k == StepKind::D ? -1 : 0;
        if (k != StepKind::U && height == 0) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> low_h_positions(const LatticePath& path) {
    std::vector<std::size_t> out;
    int height = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        auto k = path[i].kind;
        if (k == StepKind::H && height == 0) out.push_back(i);
        height += k == StepKind::U ? 1 : k == StepKind::D ? -1 : 0;
    }
    return out;
}

int count_short_units(const LatticePath& path) {
    int count = 0;
    std::size_t begin = 0;
    for (auto r : return_positions(path)) {
        if (r - begin == 1 && path[begin].kind == StepKind::U) ++count;
        begin = r + 1;
    }
    return count;
}

TupleShape tuple_shape(Family f) {
    switch (f) {
        case Family::Jtuple: return {Family::Q, 1};
        case Family::Mtuple: return {Family::E, 1};
        case Family::Ttuple: return {Family::E, 2};
        default: throw std::invalid_argument("not a tuple family");
    }
}

std::vector<std::vector<LatticePath>> tuple_components(Family f, int n) {
    auto shape = tuple_shape(f);
    std::vector<std::vector<LatticePath>> by_length(n + shape.offset + 1);
    for (int m = 1 + shape.offset; m <= n + shape.offset; ++m) {
        auto keep = [&](const LatticePath& p) { by_length[m].push_back(p); };
        walk_base(shape.component, m, keep);
    }
    return by_length;
}

void check_cap(PathFamily family, const EnumerationCaps& caps) {
    if (family.n < 1) throw std::invalid_argument("path families need n >= 1");
    int cap = is_plain_family(family.tag) ? caps.plain : caps.decorated;
    if (family.n > cap) {
        throw CapExceeded("enumeration of " + std::string(family_name(family.tag)) + " at n=" +
                          std::to_string(family.n) + " exceeds cap " + std::to_string(cap));
    }
}

}  // namespace detail

namespace {

void enumerate_tuples(PathFamily family, const MemberVisitor& visit) {
    const int n = family.n;
    auto shape = detail::tuple_shape(family.tag);
    auto components = detail::tuple_components(family.tag, n);
    auto stream = trudi::compositions_of(n);
    std::vector<const LatticePath*> tuple;
    std::vector<std::size_t> index;
    while (auto comp = stream.next()) {
        const auto& parts = comp->parts;
        const int k = static_cast<int>(parts.size());
        bool empty = false;
        for (int p : parts) empty = empty || components[p + shape.offset].empty();
        if (empty) continue;
        index.assign(k, 0);
        tuple.assign(k, nullptr);
        const int sign = ((n - k) % 2 == 0) ? 1 : -1;
        while (true) {
            for (int i = 0; i < k; ++i) tuple[i] = &components[parts[i] + shape.offset][index[i]];
            visit(Member{tuple, sign});
            int i = k - 1;
            while (i >= 0 && ++index[i] == components[parts[i] + shape.offset].size()) {
                index[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
}

}  // namespace

void enumerate(PathFamily family, const MemberVisitor& visit, EnumerationCaps caps) {
    detail::check_cap(family, caps);
    if (is_tuple_family(family.tag)) {
        enumerate_tuples(family, visit);
        return;
    }
    const LatticePath* slot[1] = {nullptr};
    auto emit = [&](const LatticePath& p, int sign) {
        slot[0] = &p;
        visit(Member{slot, sign});
    };
    auto per_base = [&](const LatticePath& base) {
        LatticePath work = base;
        detail::expand_decorations(family.tag, family.n, work, emit);
    };
    detail::walk_base(family.tag, family.n, per_base);
}

std::vector<std::vector<LatticePath>> collect(PathFamily family, EnumerationCaps caps) {
    std::vector<std::vector<LatticePath>> out;
    enumerate(
        family,
        [&](const Member& m) {
            std::vector<LatticePath> member;
            for (const auto* p : m.components) member.push_back(*p);
            out.push_back(std::move(member));
        },
        caps);
    return out;
}

int member_sign(PathFamily family, std::span<const LatticePath> components) {
    const int n = family.n;
    auto parity = [n](int k) { return ((n - k) % 2 == 0) ? 1 : -1; };
    if (is_tuple_family(family.tag)) return parity(static_cast<int>(components.size()));
    const auto st = stats(components.front());
    switch (family.tag) {
        case Family::A:
        case Family::Aprime:
            return parity(st.marked_returns);
        case Family::B:
        case Family::Bprime:
            return parity(st.marked_low_h);
        case Family::Dprime:
            return parity(st.short_units);
        case Family::L:
            return parity(st.returns - st.marked_returns);
        default:
            return 1;
    }
}

namespace {

bool undecorated(const LatticePath& p) {
    return std::all_of(p.steps().begin(), p.steps().end(), [](const Step& s) { return !s.marked && s.color == 0; });
}

bool has_h(const LatticePath& p) {
    return std::any_of(p.steps().begin(), p.steps().end(), [](const Step& s) { return s.kind == StepKind::H; });
}

// Marks only on returns, colours nowhere.
bool marks_on_returns_only(const LatticePath& p) {
    auto h = p.heights();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].color != 0) return false;
        if (p[i].marked && (p[i].kind == StepKind::U || h[i + 1] != 0)) return false;
    }
    return true;
}

bool plain_member(Family f, const LatticePath& p, int n) {
    if (!p.is_valid() || p.length() != n || !undecorated(p)) return false;
    auto st = stats(p);
    switch (f) {
        case Family::P: return true;
        case Family::Q: return st.low_h == 0;
        case Family::D: return !has_h(p);
        case Family::E: return !has_h(p) && st.peaks_h1 == 0;
        case Family::Dprime: {
            if (has_h(p) || st.units.empty()) return false;
            const auto& last = st.units.back();
            return last.end - last.begin == 2 && p[last.begin].kind == StepKind::U;
        }
        default: return false;
    }
}

LatticePath stripped(const LatticePath& p) {
    std::vector<Step> steps(p.steps().begin(), p.steps().end());
    for (auto& s : steps) s = Step{s.kind};
    return LatticePath(std::move(steps));
}

}  // namespace

bool is_member(PathFamily family, std::span<const LatticePath> components) {
    const int n = family.n;
    if (components.empty()) return false;
    if (is_tuple_family(family.tag)) {
        auto shape = detail::tuple_shape(family.tag);
        int total = 0;
        for (const auto& c : components) {
            if (!plain_member(shape.component, c, c.length())) return false;
            if (c.length() < 1 + shape.offset) return false;
            total += c.length();
        }
        const int k = static_cast<int>(components.size());
        return k <= n && total == n + shape.offset * k;
    }
    if (components.size() != 1) return false;
    const LatticePath& p = components.front();
    if (is_plain_family(family.tag)) return plain_member(family.tag, p, n);

    const LatticePath base = stripped(p);
    if (!plain_member(Family::P, base, n)) return false;
    const auto st = stats(p);
    const auto h = p.heights();
    switch (family.tag) {
        case Family::A:
        case Family::Aprime:
            if (!marks_on_returns_only(p) || !p.back().marked) return false;
            return family.tag == Family::A || st.low_h == 0;
        case Family::B:
        case Family::Bprime: {
            if (!marks_on_returns_only(p) || p.back().kind != StepKind::H || !p.back().marked) return false;
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (p[i].marked && p[i].kind != StepKind::H) return false;
            }
            return family.tag == Family::B || st.marked_low_h == st.low_h;
        }
        case Family::L:
            if (!plain_member(Family::E, base, n) || !marks_on_returns_only(p)) return false;
            return !p[st.units.front().end - 1].marked;
        case Family::Pstar3:
        case Family::Ptilde4: {
            const int colors = family.tag == Family::Pstar3 ? 3 : 4;
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (p[i].marked) return false;
                bool low = p[i].kind == StepKind::H && h[i] == 0;
                if (low != (p[i].color != 0)) return false;
                if (p[i].color > colors) return false;
            }
            return true;
        }
        default:
            return false;
    }
}

std::string member_to_string(const Member& m) {
    std::string out;
    for (const auto* c : m.components) {
        if (!out.empty()) out += " | ";
        out += c->to_string();
    }
    return out;
}

Tally tally(PathFamily family, EnumerationCaps caps, Execution exec) {
    detail::check_cap(family, caps);
    if (exec == Execution::parallel) return kernels::tally_parallel(family);
    Tally t;
    enumerate(
        family,
        [&](const Member& m) {
            t.cardinality += Integer(1);
            t.signed_sum += Integer(m.sign);
        },
        caps);
    return t;
}

Integer family_cardinality(PathFamily family, EnumerationCaps caps, Execution exec) {
    return tally(family, caps, exec).cardinality;
}

Integer family_signed_sum(PathFamily family, EnumerationCaps caps, Execution exec) {
    return tally(family, caps, exec).signed_sum;
}

Integer dyck_return_count(int m, int j, EnumerationCaps caps) {
    Integer count;
    enumerate(
        {Family::D, m},
        [&](const Member& mem) {
            if (stats(mem.path()).returns == j) count += Integer(1);
        },
        caps);
    return count;
}

Integer a030238_sum(int n, EnumerationCaps caps) {
    if (n < 0) throw std::invalid_argument("a030238_sum: n must be non-negative");
    Integer total;
    for (int j = 1; j <= (n + 2) / 2; ++j) total += dyck_return_count(n + 2 - j, j, caps);
    return total;
}

Integer transfer_count(int n, const SchroederWeights& weights) {
    if (n < 0) throw std::invalid_argument("transfer_count: n must be non-negative");
    const int columns = 2 * n;
    // state[x][h][f]: weighted prefixes ending at column x, height h; f = 1
    // when the last step was a u leaving the axis.
    std::vector<std::vector<std::array<Integer, 2>>> state(columns + 1,
                                                           std::vector<std::array<Integer, 2>>(n + 2));
    state[0][0][0] = Integer(1);
    for (int x = 0; x < columns; ++x) {
        for (int h = 0; h <= n; ++h) {
            for (int f = 0; f < 2; ++f) {
                const Integer& w = state[x][h][f];
                if (w.is_zero()) continue;
                if (h + 1 <= n) state[x + 1][h + 1][h == 0 ? 1 : 0] += w;
                if (h >= 1 && (weights.allow_hills || !(h == 1 && f == 1))) state[x + 1][h - 1][0] += w;
                if (weights.allow_h && x + 2 <= columns) {
                    if (h > 0) {
                        state[x + 2][h][0] += w;
                    } else if (!weights.low_h.is_zero()) {
                        state[x + 2][h][0] += w * weights.low_h;
                    }
                }
            }
        }
    }
    return state[columns][0][0];
}

}  // namespace htdet::paths
