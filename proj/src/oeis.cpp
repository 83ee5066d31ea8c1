#include <algorithm>
#include <sstream>

#include "htdet/errors.hpp"
#include "htdet/verify.hpp"

namespace htdet::verify {

using sequences::SequenceId;

std::string fixture_name(SequenceId id) {
    if (auto a = sequences::oeis_number(id)) return "b" + std::string(a->substr(1)) + ".txt";
    return "u_fine_hessenberg.txt";
}

int expected_fixture_terms(SequenceId id) { return id == SequenceId::A030238 ? 10 : 20; }

VerificationReport compare_with_bfile(SequenceId id, const BFile& bfile, std::string_view label) {
    VerificationReport report;
    report.identity = "oeis." + std::string(sequences::sequence_name(id));
    const int first = sequences::first_index(id);
    if (bfile.offset != first) {
        report.warnings.push_back("index offset mismatch: b-file starts at " + std::to_string(bfile.offset) +
                                  ", sequence starts at " + std::to_string(first));
    }
    const int count = static_cast<int>(bfile.values.size());
    if (count < expected_fixture_terms(id)) {
        report.warnings.push_back("short b-file: " + std::to_string(count) + " terms, expected at least " +
                                  std::to_string(expected_fixture_terms(id)));
    }
    const std::string route(label);
    for (int i = 0; i < count; ++i) {
        const int n = bfile.offset + i;
        if (n < first) continue;
        Record rec;
        rec.n = n;
        rec.route = route;
        try {
            rec.lhs = sequences::term(id, n);
        } catch (const CapExceeded& e) {
            report.skipped.push_back({n, route, e.what()});
            continue;
        }
        rec.rhs = bfile.values[static_cast<std::size_t>(i)];
        rec.pass = rec.lhs == rec.rhs;
        report.pass = report.pass && rec.pass;
        report.records.push_back(std::move(rec));
    }
    if (report.records.empty()) {
        report.pass = false;
        report.warnings.push_back("no overlapping indices");
    }
    return report;
}

VerificationReport oeis_crosscheck(SequenceId id, OeisSource source, const std::filesystem::path& fixture_dir) {
    if (source == OeisSource::remote) {
        BFile remote = fetch_remote_bfile(id);
        // published b-files run to thousands of terms; the head is enough
        constexpr std::size_t head = 100;
        if (remote.values.size() > head) remote.values.resize(head);
        return compare_with_bfile(id, remote, "remote");
    }
    return compare_with_bfile(id, read_bfile(fixture_dir / fixture_name(id)), "fixture");
}

}  // namespace htdet::verify
