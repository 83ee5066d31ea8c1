// htdet: command-line front end for the determinant identity library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "htdet/errors.hpp"
#include "htdet/hessenberg.hpp"
#include "htdet/paths.hpp"
#include "htdet/sequences.hpp"
#include "htdet/series.hpp"
#include "htdet/trudi.hpp"
#include "htdet/verify.hpp"

#ifndef HTDET_FIXTURE_DIR
#define HTDET_FIXTURE_DIR "data/bfiles"
#endif

namespace {

using namespace htdet;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

sequences::SequenceId sequence_arg(const std::string& text) {
    if (auto id = sequences::parse_sequence(text)) return *id;
    throw UsageError("unknown sequence: " + text);
}

template <class Map>
auto choice(const Map& map) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : map) keys.push_back(k);
    return CLI::IsMember(keys);
}

int run_seq(const std::string& id_text, int max_n, const std::string& format, const std::string& source_text) {
    const auto id = sequence_arg(id_text);
    sequences::Source source;
    if (source_text.empty()) {
        source = sequences::sources_for(id).front();
    } else if (auto s = sequences::parse_source(source_text)) {
        source = *s;
    } else {
        throw UsageError("unknown source: " + source_text);
    }
    const auto prefix = sequences::prefix(id, max_n, source);
    if (format == "bfile") {
        std::cout << "# " << sequences::sequence_name(id) << " (" << sequences::source_name(source) << ")\n";
        verify::write_bfile(std::cout, prefix);
    } else if (format == "csv") {
        std::cout << "n,value\n";
        for (int n = prefix.offset; n <= prefix.last_index(); ++n) std::cout << n << ',' << prefix.at(n) << '\n';
    } else {
        nlohmann::ordered_json j;
        j["id"] = std::string(sequences::sequence_name(id));
        j["source"] = std::string(sequences::source_name(source));
        j["offset"] = prefix.offset;
        auto values = nlohmann::ordered_json::array();
        for (const auto& v : prefix.values) values.push_back(v.to_string());
        j["values"] = std::move(values);
        std::cout << j.dump() << '\n';
    }
    return 0;
}

int run_det(bool plus, bool minus, const std::string& id_text, int offset, int max_n) {
    if (plus == minus) throw UsageError("det: give exactly one of --plus or --minus");
    const auto id = sequence_arg(id_text);
    if (offset < sequences::first_index(id)) throw UsageError("det: offset precedes the first term");
    hessenberg::HTSpec spec{Integer(plus ? 1 : -1), {}};
    for (int i = 1; i <= max_n; ++i) spec.entries.push_back(sequences::term(id, i + offset - 1));
    const auto dets = hessenberg::forward_dets(spec);
    for (int n = 1; n <= max_n; ++n) std::cout << n << ' ' << dets[static_cast<std::size_t>(n)] << '\n';
    return 0;
}

int run_trudi(int a0, const std::string& id_text, int offset, int n, const std::string& mode) {
    const auto id = sequence_arg(id_text);
    if (offset < sequences::first_index(id)) throw UsageError("trudi: offset precedes the first term");
    std::vector<Integer> a;
    for (int i = 1; i <= n; ++i) a.push_back(sequences::term(id, i + offset - 1));
    const Integer v = mode == "partitions" ? trudi::trudi_partition_sum(Integer(a0), a)
                                           : trudi::trudi_composition_sum(Integer(a0), a);
    std::cout << v << '\n';
    return 0;
}

int run_series(const std::string& gf_text, int order, const std::string& format) {
    const auto gf = series::parse_gf(gf_text);
    if (!gf) throw UsageError("unknown generating function: " + gf_text);
    const auto s = series::gf_catalog(*gf, static_cast<std::size_t>(order));
    std::cout << (format == "json" ? s.to_json() : s.to_string()) << '\n';
    return 0;
}

int run_paths(const std::string& what, const std::string& family_text, int n, bool list) {
    const auto family = paths::parse_family(family_text);
    if (!family) throw UsageError("unknown family: " + family_text);
    const paths::PathFamily pf{*family, n};
    if (list) {
        paths::enumerate(pf, [](const paths::Member& m) {
            std::cout << (m.sign > 0 ? "+ " : "- ") << paths::member_to_string(m) << '\n';
        });
    }
    const auto t = paths::tally(pf);
    std::cout << (what == "count" ? t.cardinality : t.signed_sum) << '\n';
    return 0;
}

int run_verify(const std::vector<std::string>& ids, int max_n, const std::string& routes_text,
               const std::string& format) {
    verify::RunOptions options;
    if (max_n >= 0) options.max_n = max_n;
    if (!routes_text.empty()) {
        std::stringstream ss(routes_text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            auto r = verify::parse_route(part);
            if (!r) throw UsageError("unknown route: " + part);
            options.routes.push_back(*r);
        }
    }
    std::vector<verify::IdentitySpec> specs;
    if (ids.empty()) {
        specs = verify::registry();
    } else {
        for (const auto& id : ids) {
            try {
                specs.push_back(verify::find_identity(id));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
    }
    const auto result = verify::run_all(specs, options);
    if (format == "text") {
        for (const auto& r : result.reports) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.identity << "  records=" << r.records.size()
                      << " skipped=" << r.skipped.size() << '\n';
            for (const auto& w : r.warnings) std::cout << "  warning: " << w << '\n';
            for (const auto& rec : r.records) {
                if (!rec.pass) {
                    std::cout << "  n=" << rec.n << " route=" << rec.route << " lhs=" << rec.lhs << " rhs=" << rec.rhs
                              << '\n';
                }
            }
        }
    } else {
        std::cout << verify::reports_to_json(result.reports) << '\n';
    }
    return result.exit_status;
}

int run_oeis(const std::string& id_text, bool remote, const std::string& fixtures, const std::string& format) {
    const auto id = sequence_arg(id_text);
    const auto report = verify::oeis_crosscheck(id, remote ? verify::OeisSource::remote : verify::OeisSource::fixture,
                                                fixtures);
    if (format == "json") {
        std::cout << report.to_json() << '\n';
    } else {
        std::cout << (report.pass ? "PASS " : "FAIL ") << report.identity << "  compared=" << report.records.size()
                  << " skipped=" << report.skipped.size() << '\n';
        for (const auto& w : report.warnings) std::cout << "  warning: " << w << '\n';
        for (const auto& rec : report.records) {
            if (!rec.pass) std::cout << "  n=" << rec.n << " computed=" << rec.lhs << " b-file=" << rec.rhs << '\n';
        }
    }
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hessenberg-Toeplitz determinants and the identities they satisfy"};
    app.require_subcommand(1);

    const std::map<std::string, int> formats{{"json", 0}, {"csv", 1}, {"bfile", 2}};
    const std::map<std::string, int> text_json{{"text", 0}, {"json", 1}};

    std::string seq_id, seq_format = "json", seq_source;
    int seq_max = 20;
    auto* seq = app.add_subcommand("seq", "Print a sequence prefix");
    seq->add_option("id", seq_id, "Sequence name or A-number")->required();
    seq->add_option("--max-n", seq_max, "Last index")->check(CLI::NonNegativeNumber);
    seq->add_option("--format", seq_format)->check(choice(formats));
    seq->add_option("--source", seq_source, "Route: closed_form, recurrence, series, enumeration, determinant");

    bool det_plus = false, det_minus = false;
    std::string det_seq;
    int det_offset = 1, det_max = 10;
    auto* det = app.add_subcommand("det", "Leading determinants D(a0; seq_K, seq_K+1, ...)");
    det->add_flag("--plus", det_plus, "a0 = +1");
    det->add_flag("--minus", det_minus, "a0 = -1");
    det->add_option("--sequence", det_seq)->required();
    det->add_option("--offset", det_offset, "Index of the first entry a_1");
    det->add_option("--max-n", det_max)->check(CLI::PositiveNumber);

    int trudi_a0 = 1, trudi_n = 5, trudi_offset = 1;
    std::string trudi_seq, trudi_mode = "partitions";
    auto* trudi_cmd = app.add_subcommand("trudi", "Evaluate the multinomial expansion of a determinant");
    trudi_cmd->add_option("--a0", trudi_a0)->check(CLI::IsMember({1, -1}));
    trudi_cmd->add_option("--sequence", trudi_seq)->required();
    trudi_cmd->add_option("--offset", trudi_offset, "Index of the first entry a_1");
    trudi_cmd->add_option("--n", trudi_n)->check(CLI::PositiveNumber);
    trudi_cmd->add_option("--mode", trudi_mode)->check(CLI::IsMember({"partitions", "compositions"}));

    std::string gf_id, series_format = "text";
    int series_order = 10;
    auto* series_cmd = app.add_subcommand("series", "Expand a catalogued generating function");
    series_cmd->add_option("gf", gf_id, "LargeSchroeder, SmallSchroeder, Fine, Catalan or A134425")->required();
    series_cmd->add_option("--order", series_order)->check(CLI::PositiveNumber);
    series_cmd->add_option("--format", series_format)->check(choice(text_json));

    std::string paths_what, paths_family;
    int paths_n = 4;
    bool paths_list = false;
    auto* paths_cmd = app.add_subcommand("paths", "Count a lattice path family");
    paths_cmd->add_option("what", paths_what)->required()->check(CLI::IsMember({"count", "signed-sum"}));
    paths_cmd->add_option("--family", paths_family)->required();
    paths_cmd->add_option("--n", paths_n)->check(CLI::PositiveNumber);
    paths_cmd->add_flag("--list", paths_list, "Print every member with its sign first");

    std::vector<std::string> verify_ids;
    int verify_max = -1;
    std::string verify_routes, verify_format = "json";
    auto* verify_cmd = app.add_subcommand("verify", "Check registered identities");
    verify_cmd->add_option("--identity", verify_ids, "Identity id (repeatable); default all");
    verify_cmd->add_option("--max-n", verify_max)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--routes", verify_routes, "Comma-separated routes");
    verify_cmd->add_option("--format", verify_format)->check(choice(text_json));

    std::string oeis_id, oeis_fixtures = HTDET_FIXTURE_DIR, oeis_format = "text";
    bool oeis_remote = false;
    auto* oeis_cmd = app.add_subcommand("oeis", "Compare against OEIS b-files");
    oeis_cmd->require_subcommand(1);
    auto* check = oeis_cmd->add_subcommand("check", "Compare one sequence");
    check->add_option("id", oeis_id)->required();
    check->add_flag("--remote", oeis_remote, "Download the b-file from oeis.org");
    check->add_option("--fixtures", oeis_fixtures, "Directory of bundled b-files");
    check->add_option("--format", oeis_format)->check(choice(text_json));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*seq) return run_seq(seq_id, seq_max, seq_format, seq_source);
        if (*det) return run_det(det_plus, det_minus, det_seq, det_offset, det_max);
        if (*trudi_cmd) return run_trudi(trudi_a0, trudi_seq, trudi_offset, trudi_n, trudi_mode);
        if (*series_cmd) return run_series(gf_id, series_order, series_format);
        if (*paths_cmd) return run_paths(paths_what, paths_family, paths_n, paths_list);
        if (*verify_cmd) return run_verify(verify_ids, verify_max, verify_routes, verify_format);
        if (*oeis_cmd) return run_oeis(oeis_id, oeis_remote, oeis_fixtures, oeis_format);
    } catch (const UsageError& e) {
        std::cerr << "htdet: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "htdet: " << e.what() << '\n';
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "htdet: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "htdet: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
