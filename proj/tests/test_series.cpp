#include <vector>

#include "doctest.h"
#include "htdet/hessenberg.hpp"
#include "htdet/sequences.hpp"
#include "htdet/series.hpp"
#include "htdet/verify.hpp"

using htdet::Integer;
using htdet::Rational;
using namespace htdet::series;
namespace seq = htdet::sequences;

namespace {

PowerSeries ps(std::initializer_list<long> xs) {
    std::vector<Rational> c;
    for (long x : xs) c.emplace_back(x);
    return PowerSeries(std::move(c));
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

PowerSeries ones(std::size_t order) { return PowerSeries(std::vector<Rational>(order, Rational(1))); }

}  // namespace

TEST_CASE("geometric series") {
    const PowerSeries product = PowerSeries::polynomial({Rational(1), Rational(-1)}, 8) * ones(8);
    CHECK(product == PowerSeries::polynomial({Rational(1)}, 8));
}

TEST_CASE("division cancels a common power of x") {
    const PowerSeries q = ps({0, 4, 2, 4, 10}) / ps({4, 2, 0, 0, 0});
    CHECK(q.integer_coefficients() == ints({0, 1, 0, 1, 2}));

    const PowerSeries r = ps({0, 0, 6, 3}) / ps({0, 3, 0, 0});
    CHECK(r.order() == 3);
    CHECK(r.integer_coefficients() == ints({0, 2, 1}));

    CHECK_THROWS_AS(ps({1, 2}) / ps({0, 0}), std::domain_error);
    CHECK_THROWS_AS(ps({1, 2, 3}) / ps({0, 1, 0}), std::domain_error);
}

TEST_CASE("arithmetic keeps the smaller order") {
    CHECK((ps({1, 2, 3}) + ps({1, 1})).order() == 2);
    CHECK((ps({1, 2, 3}) * ps({1, 1, 1, 1})).order() == 3);
    CHECK((Rational(Integer(1), Integer(2)) * ps({2, 4})).integer_coefficients() == ints({1, 2}));
}

TEST_CASE("shift") {
    CHECK(shift(ps({0, 0, 1, 1}), -2) == ps({1, 1}));
    CHECK(shift(ps({1, 1}), 2) == ps({0, 0, 1, 1}));
    CHECK_THROWS_AS(shift(ps({0, 1, 1}), -2), std::domain_error);
}

TEST_CASE("square roots") {
    const PowerSeries c = sqrt(PowerSeries::polynomial({Rational(1), Rational(-4)}, 6));
    CHECK(c.integer_coefficients() == ints({1, -2, -2, -4, -10, -28}));
    const PowerSeries s = sqrt(PowerSeries::polynomial({Rational(1), Rational(-6), Rational(1)}, 5));
    CHECK(s.integer_coefficients() == ints({1, -3, -4, -12, -44}));
    CHECK(sqrt(ps({1})) == ps({1}));
    CHECK(sqrt(ps({4, 4, 1, 0})) == ps({2, 1, 0, 0}));
    CHECK(sqrt(PowerSeries::polynomial({Rational(Integer(1), Integer(4))}, 3)) ==
          PowerSeries::polynomial({Rational(Integer(1), Integer(2))}, 3));
    CHECK_THROWS_AS(sqrt(ps({2, 1})), std::domain_error);
    CHECK_THROWS_AS(sqrt(ps({0, 1})), std::domain_error);
}

TEST_CASE("square root squares back for every radicand") {
    const std::vector<PowerSeries> radicands = {
        PowerSeries::polynomial({Rational(1), Rational(-4)}, 31),
        PowerSeries::polynomial({Rational(1), Rational(-6), Rational(1)}, 31),
        PowerSeries::polynomial({Rational(9), Rational(5), Rational(-2), Rational(7)}, 31),
    };
    for (const auto& a : radicands) {
        const PowerSeries y = sqrt(a);
        CHECK(y.order() == a.order());
        CHECK(y * y == a);
        CHECK(y[0] > Rational(0));
    }
}

TEST_CASE("catalog expansions") {
    CHECK(gf_catalog(GeneratingFunction::Catalan, 4).integer_coefficients() == ints({1, 1, 2, 5}));
    CHECK(gf_catalog(GeneratingFunction::Fine, 6).integer_coefficients() == ints({0, 1, 0, 1, 2, 6}));
    CHECK(gf_catalog(GeneratingFunction::A134425, 3).integer_coefficients() == ints({1, 5, 27}));
    CHECK(parse_gf("Fine") == GeneratingFunction::Fine);
    CHECK_FALSE(parse_gf("fine"));
}

TEST_CASE("catalog series agree with the sequence generators up to order 30") {
    const std::pair<GeneratingFunction, seq::SequenceId> pairs[] = {
        {GeneratingFunction::LargeSchroeder, seq::SequenceId::LargeSchroeder},
        {GeneratingFunction::SmallSchroeder, seq::SequenceId::SmallSchroeder},
        {GeneratingFunction::Fine, seq::SequenceId::Fine},
        {GeneratingFunction::Catalan, seq::SequenceId::Catalan},
        {GeneratingFunction::A134425, seq::SequenceId::A134425},
    };
    for (const auto& [gf, id] : pairs) {
        for (std::size_t order = 1; order <= 30; order += 29) {
            const auto coeffs = gf_catalog(gf, order).integer_coefficients();
            REQUIRE(coeffs.size() == order);
            for (std::size_t n = 0; n < order; ++n) CHECK(coeffs[n] == seq::term(id, static_cast<int>(n)));
        }
    }
}

TEST_CASE("f_from_g examples") {
    const PowerSeries f = f_from_g(PowerSeries::polynomial({Rational(0), Rational(1)}, 8));
    CHECK(f.integer_coefficients() == ints({0, 1, 1, 1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(f_from_g(ps({1, 1})), std::domain_error);

    std::vector<Integer> S;
    for (int i = 1; i <= 12; ++i) S.push_back(seq::large_schroeder(i));
    const PowerSeries g = g_from_entries(Integer(1), S);
    for (int i = 1; i <= 12; ++i) CHECK(g[i] == Rational(htdet::sign_of_power(i - 1) * S[i - 1]));
    const auto fc = f_from_g(g).integer_coefficients();
    CHECK(fc[1] == Integer(2));
    for (int n = 2; n <= 12; ++n) CHECK(fc[n] == htdet::sign_of_power(n - 1) * seq::large_schroeder(n - 1));

    std::vector<Integer> S0;
    for (int i = 0; i < 12; ++i) S0.push_back(seq::large_schroeder(i));
    const auto fb = f_from_g(g_from_entries(Integer(-1), S0)).integer_coefficients();
    for (int n = 1; n <= 12; ++n) CHECK(fb[n] == seq::small_schroeder(n));
}

TEST_CASE("f_from_g coefficient streams equal the determinant recurrence") {
    using htdet::verify::IdentityKind;
    int checked = 0;
    for (const auto& spec : htdet::verify::registry()) {
        if (spec.kind != IdentityKind::determinant) continue;
        if (spec.id.rfind("thm2.", 0) == 0) continue;
        ++checked;
        std::vector<Integer> entries;
        for (int i = 1; i <= 25; ++i) entries.push_back(seq::term(spec.lhs.seq, i + spec.lhs.offset - 1));
        const Integer a0(spec.lhs.a0);
        const auto f = f_from_g(g_from_entries(a0, entries)).integer_coefficients();
        const auto dets = htdet::hessenberg::forward_dets({a0, entries});
        for (int n = 1; n <= 25; ++n) CHECK_MESSAGE(f[n] == dets[n], spec.id << " n=" << n);
    }
    CHECK(checked == 15);
}

TEST_CASE("series algebra for the long-unit Fine tuples gives alternating Catalan numbers") {
    std::vector<Integer> entries;
    for (int i = 1; i <= 25; ++i) entries.push_back(seq::fine(i + 3));
    const auto f = f_from_g(g_from_entries(Integer(1), entries)).integer_coefficients();
    for (int n = 3; n <= 25; ++n) CHECK(f[n] == htdet::sign_of_power(n - 1) * seq::catalan(n - 1));
}

TEST_CASE("printing") {
    CHECK(ps({1, -2, 0}).to_string() == "1 + -2*x + 0*x^2");
    CHECK(PowerSeries(std::vector<Rational>{Rational(Integer(1), Integer(2))}).to_string() == "1/2");
    CHECK(ps({0, 1}).to_json() == "[\"0\",\"1\"]");
}
