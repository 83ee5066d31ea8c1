#include "htdet/sequences.hpp"

#include <array>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "htdet/hessenberg.hpp"
#include "htdet/paths.hpp"
#include "htdet/series.hpp"

namespace htdet::sequences {

namespace {

struct Names {
    std::string_view name;
    std::string_view oeis;  // empty when none
};

constexpr std::array<Names, 10> names = {{
    {"LargeSchroeder", "A006318"},
    {"SmallSchroeder", "A001003"},
    {"Fine", "A000957"},
    {"Catalan", "A000108"},
    {"U", ""},
    {"A137398", "A137398"},
    {"A134425", "A134425"},
    {"A225887", "A225887"},
    {"A114710", "A114710"},
    {"A030238", "A030238"},
}};

constexpr std::array<std::string_view, 5> source_names = {"closed_form", "recurrence", "series", "enumeration",
                                                          "determinant"};

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// Grow-on-demand table: values[i] is the term at index offset + i. Readers
// share the lock; extension holds it exclusively and appends whole terms.
class MemoTable {
public:
    using Step = std::function<Integer(const std::vector<Integer>& known, int index)>;

    MemoTable(int offset, std::vector<Integer> seed, Step step)
        : offset_(offset), values_(std::move(seed)), step_(std::move(step)) {}

    Integer get(int index) {
        const auto slot = static_cast<std::size_t>(index - offset_);
        {
            std::shared_lock lock(mutex_);
            if (slot < values_.size()) return values_[slot];
        }
        std::unique_lock lock(mutex_);
        while (values_.size() <= slot) {
            Integer next = step_(values_, offset_ + static_cast<int>(values_.size()));
            values_.push_back(std::move(next));
        }
        return values_[slot];
    }

private:
    int offset_;
    std::vector<Integer> values_;
    Step step_;
    std::shared_mutex mutex_;
};

// Coefficients of a catalogued generating function, re-expanded at a larger
// order whenever a request runs past the cached prefix.
class SeriesTable {
public:
    explicit SeriesTable(series::GeneratingFunction id) : id_(id) {}

    Integer get(int index) {
        const auto slot = static_cast<std::size_t>(index);
        {
            std::shared_lock lock(mutex_);
            if (slot < values_.size()) return values_[slot];
        }
        std::unique_lock lock(mutex_);
        if (slot >= values_.size()) {
            const std::size_t order = std::max<std::size_t>({slot + 1, 2 * values_.size(), 16});
            values_ = series::gf_catalog(id_, order).integer_coefficients();
        }
        return values_[slot];
    }

private:
    series::GeneratingFunction id_;
    std::vector<Integer> values_;
    std::shared_mutex mutex_;
};

MemoTable& catalan_convolution_table() {
    static MemoTable table(0, {Integer(1)}, [](const std::vector<Integer>& c, int n) {
        Integer sum;
        for (int k = 0; k < n; ++k) sum += c[k] * c[n - 1 - k];
        return sum;
    });
    return table;
}

MemoTable& fine_convolution_table() {
    // t_{m+1} = C_m - sum_{k=0}^{m-1} C_k t_{m-k}
    static MemoTable table(0, {Integer(0)}, [](const std::vector<Integer>& t, int index) {
        const int m = index - 1;
        Integer value = catalan(m);
        for (int k = 0; k < m; ++k) value -= catalan(k) * t[m - k];
        return value;
    });
    return table;
}

MemoTable& u_table() {
    static MemoTable table(1, {Integer(1), Integer(1)}, [](const std::vector<Integer>& u, int n) {
        auto at = [&](int i) -> const Integer& { return u[i - 1]; };
        Integer value = at(n - 1);
        for (int i = 1; i <= n - 2; ++i) {
            const Integer term = catalan(i) * at(n - i - 1);
            if (i % 2 == 1) {
                value += term;
            } else {
                value -= term;
            }
        }
        return value;
    });
    return table;
}

MemoTable& b_table() {
    static MemoTable table(1, {Integer(0), Integer(1)}, [](const std::vector<Integer>& b, int n) {
        auto at = [&](int i) -> const Integer& { return b[i - 1]; };
        Integer sum;
        for (int k = 1; k <= n - 3; ++k) sum += catalan(k) * at(n - k - 1);
        return catalan(n - 1) + Integer(2) * sum;
    });
    return table;
}

SeriesTable& a134425_table() {
    static SeriesTable table(series::GeneratingFunction::A134425);
    return table;
}

series::GeneratingFunction gf_of(SequenceId id) {
    switch (id) {
        case SequenceId::LargeSchroeder: return series::GeneratingFunction::LargeSchroeder;
        case SequenceId::SmallSchroeder: return series::GeneratingFunction::SmallSchroeder;
        case SequenceId::Fine: return series::GeneratingFunction::Fine;
        case SequenceId::Catalan: return series::GeneratingFunction::Catalan;
        case SequenceId::A134425: return series::GeneratingFunction::A134425;
        default: break;
    }
    throw std::invalid_argument("sequence has no catalogued generating function");
}

Integer enumerated(SequenceId id, int n) {
    using paths::Family;
    auto count = [](Family f, int m) { return paths::family_cardinality({f, m}); };
    switch (id) {
        case SequenceId::LargeSchroeder: return n == 0 ? Integer(1) : count(Family::P, n);
        case SequenceId::SmallSchroeder: return n == 0 ? Integer(1) : count(Family::Q, n);
        case SequenceId::Catalan: return n == 0 ? Integer(1) : count(Family::D, n);
        case SequenceId::Fine:
            // t_n = |E_{n-1}|; E_0 holds only the empty path.
            if (n == 0) return Integer(0);
            return n == 1 ? Integer(1) : count(Family::E, n - 1);
        case SequenceId::A134425: return n == 0 ? Integer(1) : count(Family::Ptilde4, n);
        case SequenceId::A225887: return paths::transfer_count(n, {.low_h = Integer(3)});
        case SequenceId::A114710:
            return paths::transfer_count(n, {.low_h = Integer(0), .allow_hills = false});
        case SequenceId::A030238: return paths::a030238_sum(n);
        default: break;
    }
    throw std::invalid_argument("sequence has no enumeration route");
}

std::vector<Integer> terms(int from, int last, Integer (*fn)(int)) {
    std::vector<Integer> out;
    for (int n = from; n <= last; ++n) out.push_back(fn(n));
    return out;
}

std::vector<Integer> prefix_terms(SequenceId id, int first, int last) {
    std::vector<Integer> out;
    for (int n = first; n <= last; ++n) out.push_back(term(id, n));
    return out;
}

// D(a0; e_1..e_m) for m = 1..count, from one linear-memory recurrence pass.
std::vector<Integer> leading_dets(int a0, std::vector<Integer> entries) {
    auto dets = hessenberg::forward_dets({Integer(a0), std::move(entries)});
    dets.erase(dets.begin());
    return dets;
}

std::vector<Integer> determinant_terms(SequenceId id, int last) {
    using enum SequenceId;
    const int first = first_index(id);
    const int count = last - first + 1;
    std::vector<Integer> out;
    if (count <= 0) return out;
    switch (id) {
        case LargeSchroeder:  // S_m = D-(s_0..s_m)
            return leading_dets(-1, prefix_terms(SmallSchroeder, 0, last));
        case SmallSchroeder: {  // s_m = D-(S_0..S_{m-1})
            out.push_back(Integer(1));
            auto rest = leading_dets(-1, prefix_terms(LargeSchroeder, 0, last - 1));
            out.insert(out.end(), rest.begin(), rest.end());
            return out;
        }
        case Fine:
            out.push_back(Integer(0));
            for (int n = 1; n <= last; ++n) out.push_back(hessenberg::deutsch_fine(n));
            return out;
        case Catalan:  // C_m = D-(t_1..t_{m+1})
            return leading_dets(-1, prefix_terms(Fine, 1, last + 1));
        case U:  // u_m = D+(t_1..t_m)
            return leading_dets(1, prefix_terms(Fine, 1, last));
        case A137398:  // b_m = D-(t_2..t_{m+1})
            return leading_dets(-1, prefix_terms(Fine, 2, last + 1));
        case A134425:  // D-(S_1..S_{m+1}) = 2 A134425[m]
            for (auto& d : leading_dets(-1, prefix_terms(LargeSchroeder, 1, last + 1))) {
                out.push_back(exact_div(d, Integer(2)));
            }
            return out;
        case A225887:  // D-(s_1..s_{m+1})
            return leading_dets(-1, prefix_terms(SmallSchroeder, 1, last + 1));
        case A114710: {  // (-1)^m D+(s_0..s_m)
            auto dets = leading_dets(1, prefix_terms(SmallSchroeder, 0, last));
            for (std::size_t m = 0; m < dets.size(); ++m) out.push_back(m % 2 == 0 ? dets[m] : -dets[m]);
            return out;
        }
        case A030238: {  // (-1)^m D+(t_3..t_{m+3})
            auto dets = leading_dets(1, prefix_terms(Fine, 3, last + 3));
            for (std::size_t m = 0; m < dets.size(); ++m) out.push_back(m % 2 == 0 ? dets[m] : -dets[m]);
            return out;
        }
    }
    return out;
}

}  // namespace

std::string_view sequence_name(SequenceId id) { return names[static_cast<std::size_t>(id)].name; }

std::optional<SequenceId> parse_sequence(std::string_view text) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].name == text || (!names[i].oeis.empty() && names[i].oeis == text)) {
            return static_cast<SequenceId>(i);
        }
    }
    return std::nullopt;
}

std::optional<std::string_view> oeis_number(SequenceId id) {
    const auto oeis = names[static_cast<std::size_t>(id)].oeis;
    if (oeis.empty()) return std::nullopt;
    return oeis;
}

int first_index(SequenceId id) { return (id == SequenceId::U || id == SequenceId::A137398) ? 1 : 0; }

std::string_view source_name(Source s) { return source_names[static_cast<std::size_t>(s)]; }

std::optional<Source> parse_source(std::string_view text) {
    for (std::size_t i = 0; i < source_names.size(); ++i) {
        if (source_names[i] == text) return static_cast<Source>(i);
    }
    return std::nullopt;
}

Integer catalan(int n) {
    require(n >= 0, "catalan: index must be non-negative");
    return exact_div(binomial(2L * n, n), Integer(n + 1));
}

Integer catalan_via_convolution(int n) {
    require(n >= 0, "catalan_via_convolution: index must be non-negative");
    return catalan_convolution_table().get(n);
}

Integer large_schroeder(int n) {
    require(n >= 0, "large_schroeder: index must be non-negative");
    if (n == 0) return Integer(1);
    Integer sum;
    Integer power(1);
    for (int k = 1; k <= n; ++k) {
        power *= Integer(2);
        sum += power * binomial(n, k) * binomial(n, k - 1);
    }
    return exact_div(sum, Integer(n));
}

Integer small_schroeder(int n) {
    require(n >= 0, "small_schroeder: index must be non-negative");
    if (n == 0) return Integer(1);
    return exact_div(large_schroeder(n), Integer(2));
}

Integer fine(int n) {
    require(n >= 0, "fine: index must be non-negative");
    if (n == 0) return Integer(0);
    Integer sum;
    for (int k = 1; k <= (n + 1) / 2; ++k) sum += binomial(2L * n - 2L * k, n - 1);
    return Integer(3) * sum - binomial(2L * n, n);
}

Integer fine_via_catalan(int n) {
    require(n >= 0, "fine_via_catalan: index must be non-negative");
    return fine_convolution_table().get(n);
}

Integer fine_half_alternating(int n) {
    require(n >= 1, "fine_half_alternating: n must be at least 1");
    Rational sum;
    for (int k = 2; k <= n; ++k) {
        const Integer scale = signed_power(Integer(-2), static_cast<unsigned long>(n - k));
        sum += Rational(catalan(k), scale);
    }
    sum /= Rational(2);
    if (!sum.is_integer()) throw std::logic_error("fine_half_alternating: sum did not clear to an integer");
    return sum.to_integer();
}

Integer schroeder_via_catalan(int n) {
    require(n >= 0, "schroeder_via_catalan: index must be non-negative");
    Integer sum;
    for (int k = 0; k <= n; ++k) sum += binomial(n + k, 2L * k) * catalan(k);
    return sum;
}

Integer u_sequence(int n) {
    require(n >= 1, "u_sequence: index must be at least 1");
    return u_table().get(n);
}

Integer a137398(int n) {
    require(n >= 1, "a137398: index must be at least 1");
    return b_table().get(n);
}

bool a137398_second_recurrence_holds(int n) {
    require(n >= 4, "a137398_second_recurrence_holds: n must be at least 4");
    Integer rhs = Integer(2) * a137398(n - 1) + Integer(2) * a137398(n - 2);
    for (int k = 1; k <= n - 3; ++k) rhs += catalan(k) * a137398(n - k - 1);
    return a137398(n) == rhs;
}

Integer auxiliary_sequence(SequenceId id, int n) {
    require(n >= 0, "auxiliary_sequence: index must be non-negative");
    switch (id) {
        case SequenceId::A134425: return a134425_table().get(n);
        case SequenceId::A225887:
        case SequenceId::A114710:
        case SequenceId::A030238: return enumerated(id, n);
        default: break;
    }
    throw std::invalid_argument("auxiliary_sequence: not an auxiliary sequence");
}

bool check_catalan_fine_relation(int n) {
    require(n >= 0, "check_catalan_fine_relation: index must be non-negative");
    return catalan(n) == Integer(2) * fine(n + 1) + fine(n);
}

Integer term(SequenceId id, int n) {
    switch (id) {
        case SequenceId::LargeSchroeder: return large_schroeder(n);
        case SequenceId::SmallSchroeder: return small_schroeder(n);
        case SequenceId::Fine: return fine(n);
        case SequenceId::Catalan: return catalan(n);
        case SequenceId::U: return u_sequence(n);
        case SequenceId::A137398: return a137398(n);
        default: return auxiliary_sequence(id, n);
    }
}

std::vector<Source> sources_for(SequenceId id) {
    using enum Source;
    switch (id) {
        case SequenceId::LargeSchroeder:
        case SequenceId::Fine:
        case SequenceId::Catalan: return {closed_form, recurrence, series, enumeration, determinant};
        case SequenceId::SmallSchroeder: return {closed_form, series, enumeration, determinant};
        case SequenceId::U: return {recurrence, series, determinant};
        case SequenceId::A137398: return {recurrence, determinant};
        case SequenceId::A134425: return {series, enumeration, determinant};
        case SequenceId::A225887:
        case SequenceId::A114710:
        case SequenceId::A030238: return {enumeration, determinant};
    }
    return {};
}

SequencePrefix prefix(SequenceId id, int last_index, Source source) {
    const int first = first_index(id);
    require(last_index >= first - 1, "prefix: last index precedes the first term");
    bool supported = false;
    for (Source s : sources_for(id)) supported = supported || s == source;
    if (!supported) {
        throw std::invalid_argument("sequence " + std::string(sequence_name(id)) + " has no " +
                                    std::string(source_name(source)) + " route");
    }

    SequencePrefix out{id, source, first, {}};
    if (last_index < first) return out;
    using enum SequenceId;
    switch (source) {
        case Source::closed_form:
            out.values = terms(first, last_index,
                               id == LargeSchroeder   ? large_schroeder
                               : id == SmallSchroeder ? small_schroeder
                               : id == Fine           ? fine
                                                      : catalan);
            break;
        case Source::recurrence:
            out.values = terms(first, last_index,
                               id == LargeSchroeder ? schroeder_via_catalan
                               : id == Fine         ? fine_via_catalan
                               : id == Catalan      ? catalan_via_convolution
                               : id == U            ? u_sequence
                                                    : a137398);
            break;
        case Source::series:
            if (id == U) {
                // coefficients of g/(1-g) with g built from t_1..t_n and a0 = 1
                auto entries = prefix_terms(Fine, 1, last_index);
                auto f = series::f_from_g(series::g_from_entries(Integer(1), entries));
                auto coeffs = f.integer_coefficients();
                out.values.assign(coeffs.begin() + 1, coeffs.end());
            } else {
                out.values = series::gf_catalog(gf_of(id), static_cast<std::size_t>(last_index) + 1)
                                 .integer_coefficients();
            }
            break;
        case Source::enumeration:
            for (int n = first; n <= last_index; ++n) out.values.push_back(enumerated(id, n));
            break;
        case Source::determinant:
            out.values = determinant_terms(id, last_index);
            break;
    }
    return out;
}

}  // namespace htdet::sequences
