#include "htdet/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>

#include "htdet/errors.hpp"
#include "htdet/hessenberg.hpp"
#include "htdet/series.hpp"
#include "htdet/trudi.hpp"
#include "json.hpp"

namespace htdet::verify {

namespace {

using sequences::SequenceId;

constexpr std::array<std::string_view, 7> route_names = {
    "recurrence", "trudi_partition", "trudi_composition", "series", "enumeration", "fraction_free", "closed_form",
};

Integer alternating_sign(int n) { return (n - 1) % 2 == 0 ? Integer(1) : Integer(-1); }

struct DetRow {
    const char* id;
    int a0;
    SequenceId seq;
    int offset;
    SequenceId rhs_seq;
    int shift;
    bool alternating;
    int factor;
    int valid_from;
    paths::Family family;
};

// Index conventions are fixed here: rhs term is seq[n + shift].
constexpr DetRow schroeder_rows[] = {
    {"thm1.e1", 1, SequenceId::LargeSchroeder, 1, SequenceId::LargeSchroeder, -1, true, 1, 2, paths::Family::A},
    {"thm1.e2", -1, SequenceId::LargeSchroeder, 1, SequenceId::A134425, -1, false, 2, 1, paths::Family::A},
    {"thm1.e3", 1, SequenceId::LargeSchroeder, 0, SequenceId::SmallSchroeder, -1, true, 1, 1, paths::Family::B},
    {"thm1.e4", -1, SequenceId::LargeSchroeder, 0, SequenceId::SmallSchroeder, 0, false, 1, 1, paths::Family::B},
    {"thm1.e5", 1, SequenceId::SmallSchroeder, 1, SequenceId::LargeSchroeder, -1, true, 1, 1, paths::Family::Aprime},
    {"thm1.e6", -1, SequenceId::SmallSchroeder, 1, SequenceId::A225887, -1, false, 1, 1, paths::Family::Aprime},
    {"thm1.e7", 1, SequenceId::SmallSchroeder, 0, SequenceId::A114710, -1, true, 1, 1, paths::Family::Bprime},
    {"thm1.e8", -1, SequenceId::SmallSchroeder, 0, SequenceId::LargeSchroeder, -1, false, 1, 1, paths::Family::Bprime},
    {"thm1.e9", 1, SequenceId::SmallSchroeder, 2, SequenceId::LargeSchroeder, -1, true, 1, 2, paths::Family::Jtuple},
};

constexpr DetRow fine_rows[] = {
    {"thm3.e22", 1, SequenceId::Fine, 1, SequenceId::U, 0, false, 1, 1, paths::Family::Dprime},
    {"thm3.e23", -1, SequenceId::Fine, 1, SequenceId::Catalan, -1, false, 1, 1, paths::Family::Dprime},
    {"thm3.e24", 1, SequenceId::Fine, 2, SequenceId::Catalan, -1, true, 1, 2, paths::Family::L},
    {"thm3.e25", -1, SequenceId::Fine, 2, SequenceId::A137398, 0, false, 1, 1, paths::Family::L},
    {"thm3.e26", 1, SequenceId::Fine, 3, SequenceId::A030238, -1, true, 1, 1, paths::Family::Mtuple},
    {"thm3.e27", 1, SequenceId::Fine, 4, SequenceId::Catalan, -1, true, 1, 3, paths::Family::Ttuple},
};

IdentitySpec from_row(const DetRow& row, IdentityKind kind) {
    IdentitySpec s;
    s.id = row.id;
    s.kind = kind;
    s.lhs = {row.a0, row.seq, row.offset};
    s.rhs = {row.rhs_seq, row.shift, row.alternating, row.factor};
    s.valid_from = row.valid_from;
    s.family = row.family;
    return s;
}

std::vector<IdentitySpec> build_registry() {
    std::vector<IdentitySpec> out;
    const std::vector<Route> det_routes = {Route::recurrence, Route::series, Route::fraction_free, Route::enumeration};
    for (const auto& row : schroeder_rows) {
        auto s = from_row(row, IdentityKind::determinant);
        s.routes = det_routes;
        if (s.id == "thm1.e2") s.note = "holds from n = 1: D-(S_1) = 2 = 2*A134425[0]";
        out.push_back(std::move(s));
    }

    // Multinomial twins: same determinant descriptor, unsigned right side.
    for (std::size_t i = 0; i < std::size(schroeder_rows); ++i) {
        auto s = from_row(schroeder_rows[i], IdentityKind::trudi_literal);
        s.id = "thm2.e" + std::to_string(13 + i);
        s.rhs.alternating = false;
        s.routes = {Route::trudi_partition, Route::trudi_composition, Route::recurrence};
        s.family.reset();
        if (i == 5) s.note = "indexed A225887[n-1], matching its determinant twin thm1.e6; D-(s_1) = 1 = A225887[0]";
        out.push_back(std::move(s));
    }

    for (std::size_t i = 0; i < std::size(fine_rows); ++i) {
        auto s = from_row(fine_rows[i], IdentityKind::determinant);
        s.aliases = {"thm3.e" + std::to_string(i + 1)};
        s.routes = det_routes;
        s.routes.push_back(Route::trudi_partition);
        s.routes.push_back(Route::trudi_composition);
        if (s.id == "thm3.e26") {
            s.max_n = 12;
            s.note = "A030238 comes from path-enumerated a(m, j), available for n <= 12";
        }
        out.push_back(std::move(s));
    }

    auto hankel = [&](const char* id, SequenceId seq, int offset, HankelLaw law) {
        IdentitySpec s;
        s.id = id;
        s.kind = IdentityKind::hankel;
        s.lhs = {1, seq, offset};
        s.hankel_law = law;
        s.valid_from = 1;
        s.max_n = 7;
        s.routes = {Route::fraction_free};
        out.push_back(std::move(s));
    };
    hankel("hankel.schroeder0", SequenceId::LargeSchroeder, 0, HankelLaw::pow2_binom_n_2);
    hankel("hankel.schroeder1", SequenceId::LargeSchroeder, 1, HankelLaw::pow2_binom_n1_2);
    hankel("hankel.fine1", SequenceId::Fine, 1, HankelLaw::one);
    hankel("hankel.fine2", SequenceId::Fine, 2, HankelLaw::one_minus_n);

    {
        IdentitySpec s;
        s.id = "deutsch.eq1";
        s.kind = IdentityKind::deutsch;
        s.lhs = {1, SequenceId::Catalan, 0};
        s.valid_from = 1;
        s.max_n = 15;
        s.routes = {Route::fraction_free, Route::recurrence};
        out.push_back(std::move(s));
    }

    auto relation = [&](const char* id, Relation r, int from, std::vector<Route> routes) {
        IdentitySpec s;
        s.id = id;
        s.kind = IdentityKind::relation;
        s.relation = r;
        s.valid_from = from;
        s.max_n = 40;
        s.routes = std::move(routes);
        out.push_back(std::move(s));
    };
    relation("rel.catalan_fine", Relation::catalan_fine, 1, {Route::closed_form});
    relation("rel.schroeder_catalan", Relation::schroeder_catalan, 1, {Route::closed_form});
    relation("rel.fine_half", Relation::fine_half, 1, {Route::closed_form});
    relation("rel.fine_conv", Relation::fine_conv, 0, {Route::closed_form});
    relation("rel.small_is_half", Relation::small_is_half, 1, {Route::closed_form, Route::series});
    return out;
}

std::vector<Integer> det_entries(const DetDescriptor& d, int n) {
    std::vector<Integer> a;
    a.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) a.push_back(sequences::term(d.seq, i + d.offset - 1));
    return a;
}

std::vector<Integer> series_entries(const DetDescriptor& d, int n) {
    const series::GeneratingFunction gf = [&] {
        switch (d.seq) {
            case SequenceId::LargeSchroeder: return series::GeneratingFunction::LargeSchroeder;
            case SequenceId::SmallSchroeder: return series::GeneratingFunction::SmallSchroeder;
            case SequenceId::Fine: return series::GeneratingFunction::Fine;
            case SequenceId::Catalan: return series::GeneratingFunction::Catalan;
            default: throw std::invalid_argument("series route needs a catalogued generating function");
        }
    }();
    auto coeffs =
        series::gf_catalog(gf, static_cast<std::size_t>(n + d.offset)).integer_coefficients();
    return {coeffs.begin() + d.offset, coeffs.begin() + d.offset + n};
}

Integer determinant_lhs(const IdentitySpec& spec, Route route, int n, const RouteCaps& caps) {
    const Integer a0(spec.lhs.a0);
    switch (route) {
        case Route::recurrence: return hessenberg::det_recurrence({a0, det_entries(spec.lhs, n)});
        case Route::fraction_free: return hessenberg::det_fraction_free(hessenberg::HTSpec{a0, det_entries(spec.lhs, n)});
        case Route::trudi_partition: return trudi::trudi_partition_sum(a0, det_entries(spec.lhs, n));
        case Route::trudi_composition:
            return trudi::trudi_composition_sum(a0, det_entries(spec.lhs, n), caps.trudi_composition);
        case Route::series: {
            const auto g = series::g_from_entries(a0, series_entries(spec.lhs, n));
            return series::f_from_g(g)[static_cast<std::size_t>(n)].to_integer();
        }
        case Route::enumeration: {
            if (!spec.family) throw std::invalid_argument(spec.id + " has no path family");
            const paths::PathFamily fam{*spec.family, n};
            paths::EnumerationCaps ec;
            ec.plain = std::max(ec.plain, caps.enumeration);
            ec.decorated = std::max(ec.decorated, caps.enumeration);
            // a0 = +1 weighs members by sign; a0 = -1 counts them
            return spec.lhs.a0 == 1 ? paths::family_signed_sum(fam, ec) : paths::family_cardinality(fam, ec);
        }
        case Route::closed_form: break;
    }
    throw std::invalid_argument("route " + std::string(route_name(route)) + " does not apply to " + spec.id);
}

Integer relation_lhs(const IdentitySpec& spec, Route route, int n) {
    switch (spec.relation) {
        case Relation::catalan_fine: return sequences::catalan(n);
        case Relation::schroeder_catalan: return sequences::large_schroeder(n);
        case Relation::fine_half: return sequences::fine_half_alternating(n);
        case Relation::fine_conv: return sequences::fine_via_catalan(n);
        case Relation::small_is_half:
            if (route == Route::series) {
                const auto s = series::gf_catalog(series::GeneratingFunction::SmallSchroeder,
                                                  static_cast<std::size_t>(n) + 1);
                return Integer(2) * s[static_cast<std::size_t>(n)].to_integer();
            }
            return Integer(2) * sequences::small_schroeder(n);
    }
    throw std::logic_error("unknown relation");
}

Integer lhs_with_caps(const IdentitySpec& spec, Route route, int n, const RouteCaps& caps) {
    switch (spec.kind) {
        case IdentityKind::determinant: return determinant_lhs(spec, route, n, caps);
        case IdentityKind::trudi_literal: {
            // a0 = +1 sums carry (-1)^(n-|v|); the literal form carries (-1)^(|v|-1)
            const Integer det = determinant_lhs(spec, route, n, caps);
            return spec.lhs.a0 == 1 ? alternating_sign(n) * det : det;
        }
        case IdentityKind::hankel:
            if (route != Route::fraction_free) break;
            return hessenberg::hankel_det(spec.lhs.seq, spec.lhs.offset, n);
        case IdentityKind::deutsch:
            if (route == Route::fraction_free) return hessenberg::deutsch_fine(n);
            if (route == Route::recurrence) {
                std::vector<Integer> c;
                for (int k = 0; k < n; ++k) c.push_back(sequences::catalan(k));
                return alternating_sign(n) * hessenberg::d_plus(c);
            }
            break;
        case IdentityKind::relation:
            if (route != Route::closed_form && route != Route::series) break;
            return relation_lhs(spec, route, n);
    }
    throw std::invalid_argument("route " + std::string(route_name(route)) + " does not apply to " + spec.id);
}

Integer power_of_two(long k) { return signed_power(Integer(2), static_cast<unsigned long>(k)); }

nlohmann::ordered_json report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["identity"] = r.identity;
    auto records = nlohmann::ordered_json::array();
    for (const auto& rec : r.records) {
        nlohmann::ordered_json x;
        x["n"] = rec.n;
        x["lhs"] = rec.lhs.to_string();
        x["rhs"] = rec.rhs.to_string();
        x["route"] = rec.route;
        x["pass"] = rec.pass;
        records.push_back(std::move(x));
    }
    j["records"] = std::move(records);
    j["pass"] = r.pass;
    auto skipped = nlohmann::ordered_json::array();
    for (const auto& s : r.skipped) {
        nlohmann::ordered_json x;
        x["n"] = s.n;
        x["route"] = s.route;
        x["reason"] = s.reason;
        skipped.push_back(std::move(x));
    }
    j["skipped"] = std::move(skipped);
    j["warnings"] = r.warnings;
    return j;
}

}  // namespace

std::string_view route_name(Route r) { return route_names[static_cast<std::size_t>(r)]; }

std::optional<Route> parse_route(std::string_view text) {
    for (std::size_t i = 0; i < route_names.size(); ++i) {
        if (route_names[i] == text) return static_cast<Route>(i);
    }
    return std::nullopt;
}

int RouteCaps::cap(Route r) const {
    switch (r) {
        case Route::recurrence: return recurrence;
        case Route::trudi_partition: return trudi_partition;
        case Route::trudi_composition: return trudi_composition;
        case Route::series: return series;
        case Route::enumeration: return enumeration;
        case Route::fraction_free: return fraction_free;
        case Route::closed_form: return closed_form;
    }
    return 0;
}

const std::vector<IdentitySpec>& registry() {
    static const std::vector<IdentitySpec> specs = build_registry();
    return specs;
}

const IdentitySpec& find_identity(std::string_view id) {
    for (const auto& s : registry()) {
        if (s.id == id) return s;
        for (const auto& alias : s.aliases) {
            if (alias == id) return s;
        }
    }
    throw std::invalid_argument("unknown identity: " + std::string(id));
}

Integer evaluate_lhs(const IdentitySpec& spec, Route route, int n) { return lhs_with_caps(spec, route, n, RouteCaps{}); }

Integer evaluate_rhs(const IdentitySpec& spec, int n) {
    switch (spec.kind) {
        case IdentityKind::determinant:
        case IdentityKind::trudi_literal: {
            Integer v = Integer(spec.rhs.factor) * sequences::term(spec.rhs.seq, n + spec.rhs.shift);
            return spec.rhs.alternating ? alternating_sign(n) * v : v;
        }
        case IdentityKind::hankel:
            switch (spec.hankel_law) {
                case HankelLaw::pow2_binom_n_2: return power_of_two(static_cast<long>(n) * (n - 1) / 2);
                case HankelLaw::pow2_binom_n1_2: return power_of_two(static_cast<long>(n) * (n + 1) / 2);
                case HankelLaw::one: return Integer(1);
                case HankelLaw::one_minus_n: return Integer(1 - n);
            }
            break;
        case IdentityKind::deutsch: return sequences::fine(n);
        case IdentityKind::relation:
            switch (spec.relation) {
                case Relation::catalan_fine: return Integer(2) * sequences::fine(n + 1) + sequences::fine(n);
                case Relation::schroeder_catalan: return sequences::schroeder_via_catalan(n);
                case Relation::fine_half: return sequences::fine(n + 1);
                case Relation::fine_conv: return sequences::fine(n);
                case Relation::small_is_half: return sequences::large_schroeder(n);
            }
            break;
    }
    throw std::logic_error("unhandled identity kind");
}

VerificationReport run_identity(const IdentitySpec& spec, const RunOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.identity = spec.id;

    std::vector<Route> routes;
    if (options.routes.empty()) {
        routes = spec.routes;
    } else {
        for (Route r : options.routes) {
            if (std::find(spec.routes.begin(), spec.routes.end(), r) != spec.routes.end()) {
                routes.push_back(r);
            }
        }
        if (routes.empty()) {
            std::string fallback;
            for (Route r : spec.routes) fallback += (fallback.empty() ? "" : ",") + std::string(route_name(r));
            report.warnings.push_back("requested routes do not apply to " + spec.id + "; used " + fallback);
            routes = spec.routes;
        }
    }

    if (options.max_n && spec.max_n > 0 && *options.max_n > spec.max_n) {
        report.warnings.push_back(spec.id + " is checked only up to n = " + std::to_string(spec.max_n));
    }

    std::vector<std::optional<Integer>> rhs_cache;
    auto rhs_at = [&](int n) -> const Integer& {
        const auto slot = static_cast<std::size_t>(n);
        if (rhs_cache.size() <= slot) rhs_cache.resize(slot + 1);
        if (!rhs_cache[slot]) rhs_cache[slot] = evaluate_rhs(spec, n);
        return *rhs_cache[slot];
    };

    for (Route route : routes) {
        const int cap = options.caps.cap(route);
        int hi = options.max_n.value_or(cap);
        if (spec.max_n > 0) hi = std::min(hi, spec.max_n);
        const std::string name(route_name(route));
        for (int n = spec.valid_from; n <= hi; ++n) {
            if (n > cap) {
                report.skipped.push_back({n, name, "above the " + name + " cap of " + std::to_string(cap)});
                continue;
            }
            Record rec;
            rec.n = n;
            rec.route = name;
            try {
                rec.lhs = lhs_with_caps(spec, route, n, options.caps);
            } catch (const CapExceeded& e) {
                report.skipped.push_back({n, name, e.what()});
                continue;
            }
            rec.rhs = rhs_at(n);
            rec.pass = rec.lhs == rec.rhs;
            report.pass = report.pass && rec.pass;
            report.records.push_back(std::move(rec));
        }
    }

    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

RunResult run_all(const RunOptions& options) { return run_all(registry(), options); }

RunResult run_all(const std::vector<IdentitySpec>& specs, const RunOptions& options) {
    RunResult result;
    result.reports.resize(specs.size());
    const auto count = static_cast<std::int64_t>(specs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto& spec = specs[static_cast<std::size_t>(i)];
        auto& slot = result.reports[static_cast<std::size_t>(i)];
        try {
            slot = run_identity(spec, options);
        } catch (const std::exception& e) {
            slot = VerificationReport{};
            slot.identity = spec.id;
            slot.pass = false;
            slot.warnings.push_back(std::string("error: ") + e.what());
        }
    }
    for (const auto& r : result.reports) {
        if (!r.pass) result.exit_status = 1;
    }
    return result;
}

std::string VerificationReport::to_json() const { return report_json(*this).dump(2); }

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return arr.dump(2);
}

}  // namespace htdet::verify
