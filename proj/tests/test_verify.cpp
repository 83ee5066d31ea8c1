#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "htdet/errors.hpp"
#include "htdet/verify.hpp"
#include "json.hpp"

using htdet::Integer;
using namespace htdet::verify;
namespace seq = htdet::sequences;

namespace {

const Record* record_at(const VerificationReport& r, int n, std::string_view route) {
    for (const auto& rec : r.records) {
        if (rec.n == n && rec.route == route) return &rec;
    }
    return nullptr;
}

std::filesystem::path fixtures() { return HTDET_FIXTURE_DIR; }

}  // namespace

TEST_CASE("registry holds every identity exactly once") {
    std::set<std::string> expected;
    for (int e = 1; e <= 9; ++e) expected.insert("thm1.e" + std::to_string(e));
    for (int e = 13; e <= 21; ++e) expected.insert("thm2.e" + std::to_string(e));
    for (int e = 22; e <= 27; ++e) expected.insert("thm3.e" + std::to_string(e));
    for (const char* id : {"hankel.schroeder0", "hankel.schroeder1", "hankel.fine1", "hankel.fine2", "deutsch.eq1",
                           "rel.catalan_fine", "rel.schroeder_catalan", "rel.fine_half", "rel.fine_conv",
                           "rel.small_is_half"}) {
        expected.insert(id);
    }
    std::multiset<std::string> ids;
    for (const auto& spec : registry()) {
        ids.insert(spec.id);
        CHECK_FALSE(spec.routes.empty());
    }
    CHECK(ids.size() == expected.size());
    CHECK(std::set<std::string>(ids.begin(), ids.end()) == expected);
    CHECK(find_identity("thm3.e4").id == "thm3.e25");
    CHECK(find_identity("thm1.e1").family == htdet::paths::Family::A);
    CHECK_THROWS_AS(find_identity("thm9.e1"), std::invalid_argument);
    CHECK(parse_route("trudi_partition") == Route::trudi_partition);
    CHECK_FALSE(parse_route("magic"));
}

TEST_CASE("single identity runs") {
    RunOptions opts;
    opts.max_n = 5;
    opts.routes = {Route::recurrence};
    const auto r1 = run_identity(find_identity("thm1.e1"), opts);
    CHECK(r1.pass);
    const Record* at5 = record_at(r1, 5, "recurrence");
    REQUIRE(at5);
    CHECK(at5->lhs == Integer(90));
    CHECK(at5->rhs == Integer(90));

    opts.max_n = 3;
    const auto r2 = run_identity(find_identity("thm3.e4"), opts);
    CHECK(r2.pass);
    const Record* at3 = record_at(r2, 3, "recurrence");
    REQUIRE(at3);
    CHECK(at3->rhs == Integer(2));

    opts.max_n = 4;
    const auto r3 = run_identity(find_identity("hankel.fine2"), opts);
    CHECK(r3.pass);
    CHECK_FALSE(r3.warnings.empty());
    bool found = false;
    for (const auto& rec : r3.records) {
        if (rec.n == 4) {
            CHECK(rec.lhs == Integer(-3));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("every route of every identity passes at the default tiers") {
    const auto result = run_all();
    CHECK(result.exit_status == 0);
    CHECK(result.reports.size() == registry().size());
    for (const auto& r : result.reports) {
        CHECK_MESSAGE(r.pass, r.identity);
        CHECK_FALSE(r.records.empty());
        for (const auto& rec : r.records) CHECK_MESSAGE(rec.pass, r.identity << " n=" << rec.n << " " << rec.route);
    }
}

TEST_CASE("max_n = 1 is a degenerate pass") {
    RunOptions opts;
    opts.max_n = 1;
    const auto result = run_all(opts);
    CHECK(result.exit_status == 0);
    for (const auto& r : result.reports) {
        if (r.identity == "thm1.e1") CHECK(r.records.empty());
        for (const auto& rec : r.records) CHECK(rec.n <= 1);
    }
}

TEST_CASE("a corrupted rhs shift fails the run") {
    IdentitySpec broken = find_identity("thm1.e1");
    broken.rhs.shift = 0;
    RunOptions opts;
    opts.max_n = 6;
    const auto result = run_all({broken}, opts);
    CHECK(result.exit_status == 1);
    CHECK_FALSE(result.reports.front().pass);
}

TEST_CASE("route caps turn into per-n skips") {
    RunOptions opts;
    opts.max_n = 5;
    opts.routes = {Route::enumeration};
    opts.caps.enumeration = 3;
    const auto r = run_identity(find_identity("thm1.e4"), opts);
    CHECK(r.pass);
    std::set<int> skipped;
    for (const auto& s : r.skipped) skipped.insert(s.n);
    CHECK(skipped == std::set<int>{4, 5});
    CHECK(record_at(r, 3, "enumeration"));
}

TEST_CASE("JSON reports are deterministic and well formed") {
    RunOptions opts;
    opts.max_n = 6;
    const auto a = reports_to_json(run_all(opts).reports);
    const auto b = reports_to_json(run_all(opts).reports);
    CHECK(a == b);
    const auto doc = nlohmann::json::parse(a);
    REQUIRE(doc.is_array());
    for (const auto& report : doc) {
        CHECK(report.contains("identity"));
        CHECK(report["pass"].is_boolean());
        for (const auto& rec : report["records"]) {
            CHECK(rec["lhs"].is_string());
            CHECK(rec["rhs"].is_string());
            CHECK(rec["n"].is_number_integer());
            CHECK(rec["route"].is_string());
            CHECK(rec["pass"].is_boolean());
        }
    }
}

TEST_CASE("b-file reading") {
    const BFile fine = read_bfile(fixtures() / "b000957.txt");
    CHECK(fine.offset == 0);
    REQUIRE(fine.values.size() >= 6);
    CHECK(std::vector<Integer>(fine.values.begin(), fine.values.begin() + 6) ==
          std::vector<Integer>{Integer(0), Integer(1), Integer(0), Integer(1), Integer(2), Integer(6)});

    std::istringstream commented("# header\n\n5 1\n6 2\n# trailing\n7 5\n");
    const BFile c = parse_bfile(commented);
    CHECK(c.offset == 5);
    CHECK(c.values.size() == 3);

    std::istringstream bad("0 1\n1 1\n3 x\n");
    try {
        parse_bfile(bad);
        FAIL("expected a parse error");
    } catch (const BFileError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    std::istringstream gap("0 1\n2 1\n");
    CHECK_THROWS_AS(parse_bfile(gap), BFileError);
    std::istringstream junk("0 1 extra\n");
    CHECK_THROWS_AS(parse_bfile(junk), BFileError);
    CHECK_THROWS_AS(read_bfile(fixtures() / "missing.txt"), BFileError);
}

TEST_CASE("b-file writing") {
    const auto p = seq::prefix(seq::SequenceId::Catalan, 4, seq::Source::closed_form);
    CHECK(bfile_text(p) == "0 1\n1 1\n2 2\n3 5\n4 14\n");
    std::istringstream back(bfile_text(p));
    const BFile parsed = parse_bfile(back);
    CHECK(parsed.values == p.values);
}

TEST_CASE("OEIS fixture cross-checks") {
    const auto fine = oeis_crosscheck(seq::SequenceId::Fine, OeisSource::fixture, fixtures());
    CHECK(fine.pass);
    CHECK(fine.records.size() >= 21);

    const auto aux = oeis_crosscheck(seq::SequenceId::A134425, OeisSource::fixture, fixtures());
    CHECK(aux.pass);
    CHECK(aux.records.size() >= 16);

    for (auto id : seq::all_sequences) {
        const auto r = oeis_crosscheck(id, OeisSource::fixture, fixtures());
        CHECK_MESSAGE(r.pass, seq::sequence_name(id));
        CHECK_MESSAGE(r.warnings.empty(), seq::sequence_name(id));
    }
}

TEST_CASE("short and shifted fixtures") {
    BFile head;
    head.offset = 0;
    head.values = {Integer(1), Integer(1), Integer(2)};
    const auto short_report = compare_with_bfile(seq::SequenceId::Catalan, head, "fixture");
    CHECK(short_report.pass);
    CHECK(short_report.records.size() == 3);
    CHECK_FALSE(short_report.warnings.empty());

    BFile shifted;
    shifted.offset = 1;
    shifted.values = {Integer(1), Integer(2), Integer(5)};
    const auto shifted_report = compare_with_bfile(seq::SequenceId::Catalan, shifted, "fixture");
    CHECK(shifted_report.pass);
    CHECK(shifted_report.warnings.size() == 2);

    BFile wrong = head;
    wrong.values[2] = Integer(3);
    CHECK_FALSE(compare_with_bfile(seq::SequenceId::Catalan, wrong, "fixture").pass);
}
