#include <thread>
#include <vector>

#include "doctest.h"
#include "htdet/hessenberg.hpp"
#include "htdet/sequences.hpp"
#include "htdet/verify.hpp"
#include "oracles.hpp"

using htdet::Integer;
using namespace htdet::sequences;

TEST_CASE("term examples") {
    CHECK(catalan(0) == Integer(1));
    CHECK(catalan(3) == Integer(5));
    CHECK(catalan(9) == Integer(4862));
    CHECK(large_schroeder(0) == Integer(1));
    CHECK(large_schroeder(3) == Integer(22));
    CHECK(large_schroeder(10) == Integer(1037718));
    CHECK(small_schroeder(0) == Integer(1));
    CHECK(small_schroeder(4) == Integer(45));
    CHECK(small_schroeder(7) == Integer(4279));
    CHECK(fine(0) == Integer(0));
    CHECK(fine(5) == Integer(6));
    CHECK(fine(10) == Integer(2120));
    CHECK(fine_via_catalan(1) == Integer(1));
    CHECK(fine_via_catalan(4) == Integer(2));
    CHECK(fine_via_catalan(8) == Integer(186));
    CHECK(fine_half_alternating(2) == Integer(1));
    CHECK(fine_half_alternating(3) == Integer(2));
    CHECK(fine_half_alternating(6) == Integer(57));
    CHECK(schroeder_via_catalan(1) == Integer(2));
    CHECK(schroeder_via_catalan(2) == Integer(6));
    CHECK(schroeder_via_catalan(5) == Integer(394));
    CHECK(u_sequence(2) == Integer(1));
    CHECK(u_sequence(3) == Integer(2));
    CHECK(u_sequence(4) == Integer(1));
    CHECK(a137398(1) == Integer(0));
    CHECK(a137398(2) == Integer(1));
    CHECK(a137398(3) == Integer(2));
    CHECK(auxiliary_sequence(SequenceId::A134425, 1) == Integer(5));
    CHECK(auxiliary_sequence(SequenceId::A225887, 1) == Integer(4));
    CHECK(auxiliary_sequence(SequenceId::A114710, 1) == Integer(0));
    CHECK(check_catalan_fine_relation(4));
    CHECK(check_catalan_fine_relation(6));
}

TEST_CASE("u and b agree with their determinant definitions") {
    std::vector<Integer> t;
    for (int i = 1; i <= 20; ++i) t.push_back(fine(i));
    for (int n = 1; n <= 20; ++n) {
        const std::vector<Integer> head(t.begin(), t.begin() + n);
        CHECK(u_sequence(n) == oracle::dense_det(oracle::ht_matrix(Integer(1), head)));
    }
    for (int n = 2; n <= 12; ++n) {
        std::vector<Integer> entries;
        for (int i = 2; i <= n + 1; ++i) entries.push_back(fine(i));
        CHECK(a137398(n) == oracle::dense_det(oracle::ht_matrix(Integer(-1), entries)));
    }
}

TEST_CASE("catalan_fine relation is false at 0 and true from 1") {
    CHECK_FALSE(check_catalan_fine_relation(0));
    for (int n = 1; n <= 40; ++n) CHECK(check_catalan_fine_relation(n));
}

TEST_CASE("closed forms agree with their second routes for n <= 40") {
    const auto schroeder = oracle::schroeder_table(40);
    for (int n = 0; n <= 40; ++n) {
        CHECK(fine(n) == fine_via_catalan(n));
        CHECK(catalan(n) == catalan_via_convolution(n));
        CHECK(catalan(n) == oracle::catalan_ballot(n));
        CHECK(large_schroeder(n) == schroeder[n]);
        if (n >= 1) {
            CHECK(large_schroeder(n) == schroeder_via_catalan(n));
            CHECK(large_schroeder(n) == Integer(2) * small_schroeder(n));
            CHECK(fine_half_alternating(n) == fine(n + 1));
        }
    }
    CHECK_THROWS_AS(fine_half_alternating(0), std::invalid_argument);
}

TEST_CASE("both recurrences for A137398 hold for 4 <= n <= 40") {
    for (int n = 4; n <= 40; ++n) CHECK(a137398_second_recurrence_holds(n));
}

TEST_CASE("closed-form divisions are exact") {
    for (int n = 1; n <= 40; ++n) {
        CHECK(htdet::divides(Integer(n + 1), htdet::binomial(2 * n, n)));
        Integer sum;
        Integer power(1);
        for (int k = 1; k <= n; ++k) {
            power *= Integer(2);
            sum += power * htdet::binomial(n, k) * htdet::binomial(n, k - 1);
        }
        CHECK(htdet::divides(Integer(n), sum));
        CHECK(htdet::divides(Integer(2), large_schroeder(n)));
        CHECK_NOTHROW(fine_half_alternating(n));
    }
}

TEST_CASE("names, A-numbers and parsing") {
    for (SequenceId id : all_sequences) {
        CHECK(parse_sequence(sequence_name(id)) == id);
        if (auto a = oeis_number(id)) CHECK(parse_sequence(*a) == id);
    }
    CHECK(parse_sequence("A000957") == SequenceId::Fine);
    CHECK_FALSE(parse_sequence("A999999"));
    CHECK_FALSE(oeis_number(SequenceId::U));
    CHECK(first_index(SequenceId::U) == 1);
    CHECK(first_index(SequenceId::A137398) == 1);
    CHECK(first_index(SequenceId::Catalan) == 0);
    CHECK(parse_source("series") == Source::series);
}

TEST_CASE("every route of every sequence agrees") {
    for (SequenceId id : all_sequences) {
        const auto routes = sources_for(id);
        REQUIRE(routes.size() >= 2);
        const int last = 8;
        const auto reference = prefix(id, last, routes.front());
        CHECK(reference.offset == first_index(id));
        CHECK(reference.last_index() == last);
        for (Source s : routes) {
            const auto other = prefix(id, last, s);
            CHECK(other.source == s);
            CHECK_MESSAGE(other.values == reference.values, sequence_name(id) << " via " << source_name(s));
        }
    }
}

TEST_CASE("unsupported route is rejected") {
    CHECK_THROWS_AS(prefix(SequenceId::A137398, 5, Source::series), std::invalid_argument);
}

TEST_CASE("prefixes up to 20 match the b-file fixtures") {
    for (SequenceId id : all_sequences) {
        const auto bfile = htdet::verify::read_bfile(std::string(HTDET_FIXTURE_DIR) + "/" +
                                                     htdet::verify::fixture_name(id));
        CHECK(bfile.offset == first_index(id));
        const int count = htdet::verify::expected_fixture_terms(id);
        REQUIRE(static_cast<int>(bfile.values.size()) >= count);
        for (int i = 0; i < count; ++i) {
            const int n = bfile.offset + i;
            CHECK_MESSAGE(term(id, n) == bfile.values[i], sequence_name(id) << "[" << n << "]");
        }
    }
}

TEST_CASE("memo tables extend safely from many threads") {
    std::vector<std::vector<Integer>> seen(8);
    std::vector<std::thread> workers;
    for (int w = 0; w < 8; ++w) {
        workers.emplace_back([w, &seen] {
            for (int n = 40 - w; n >= 1; --n) {
                seen[w].push_back(u_sequence(n) + a137398(n) + fine_via_catalan(n) + catalan_via_convolution(n));
            }
        });
    }
    for (auto& t : workers) t.join();
    for (int w = 0; w < 8; ++w) {
        int n = 40 - w;
        for (const Integer& v : seen[w]) {
            CHECK(v == u_sequence(n) + a137398(n) + fine(n) + catalan(n));
            --n;
        }
    }
}
