#pragma once

// Identity registry and verification runner.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "htdet/numeric.hpp"
#include "htdet/paths.hpp"
#include "htdet/sequences.hpp"

namespace htdet::verify {

enum class Route { recurrence, trudi_partition, trudi_composition, series, enumeration, fraction_free, closed_form };

std::string_view route_name(Route r);
std::optional<Route> parse_route(std::string_view text);

/// Largest n each route is asked to evaluate.
struct RouteCaps {
    int recurrence = 25;
    int trudi_partition = 18;
    int trudi_composition = 14;
    int series = 25;
    int enumeration = 8;
    int fraction_free = 25;
    int closed_form = 40;

    int cap(Route r) const;
};

enum class IdentityKind {
    determinant,    // D(a0; seq_offset ..) against a signed sequence term
    trudi_literal,  // the multinomial sum with sign (-1)^(|v|-1) when a0 = +1
    hankel,
    deutsch,
    relation,
};

/// Entries a_i = seq[i + offset - 1] for i = 1..n.
struct DetDescriptor {
    int a0 = 1;
    sequences::SequenceId seq = sequences::SequenceId::LargeSchroeder;
    int offset = 1;
};

enum class HankelLaw { pow2_binom_n_2, pow2_binom_n1_2, one, one_minus_n };

enum class Relation { catalan_fine, schroeder_catalan, fine_half, fine_conv, small_is_half };

/// factor * (-1)^(n-1 if alternating) * seq[n + shift]
struct RhsDescriptor {
    sequences::SequenceId seq = sequences::SequenceId::LargeSchroeder;
    int shift = 0;
    bool alternating = false;
    int factor = 1;
};

struct IdentitySpec {
    std::string id;
    std::vector<std::string> aliases;
    IdentityKind kind = IdentityKind::determinant;
    DetDescriptor lhs;
    RhsDescriptor rhs;
    HankelLaw hankel_law = HankelLaw::one;
    Relation relation = Relation::catalan_fine;
    int valid_from = 1;
    int max_n = 0;  // identity-specific ceiling; 0 when only route caps apply
    std::vector<Route> routes;
    std::optional<paths::Family> family;  // path family realising the determinant
    std::string note;
};

const std::vector<IdentitySpec>& registry();
/// Lookup by id or alias; throws std::invalid_argument for an unknown id.
const IdentitySpec& find_identity(std::string_view id);

struct Record {
    int n = 0;
    Integer lhs;
    Integer rhs;
    std::string route;
    bool pass = false;
};

struct Skipped {
    int n = 0;
    std::string route;
    std::string reason;
};

struct VerificationReport {
    std::string identity;
    std::vector<Record> records;
    std::vector<Skipped> skipped;
    std::vector<std::string> warnings;
    bool pass = true;
    double wall_ms = 0;  // not serialised

    std::string to_json() const;
};

struct RunOptions {
    std::optional<int> max_n;          // unset: each route runs to its cap
    std::vector<Route> routes;         // empty: every route the identity lists
    RouteCaps caps;
};

/// Left side of the identity at n by one route; throws CapExceeded when the
/// route cannot reach n.
Integer evaluate_lhs(const IdentitySpec& spec, Route route, int n);
Integer evaluate_rhs(const IdentitySpec& spec, int n);

VerificationReport run_identity(const IdentitySpec& spec, const RunOptions& options = {});

struct RunResult {
    std::vector<VerificationReport> reports;  // registry order
    int exit_status = 0;
};

/// Runs every spec (default: the registry) concurrently.
RunResult run_all(const RunOptions& options = {});
RunResult run_all(const std::vector<IdentitySpec>& specs, const RunOptions& options);

std::string reports_to_json(const std::vector<VerificationReport>& reports);

// ---- b-files ----

struct BFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Terms of a b-file: values[i] is the term at index offset + i.
struct BFile {
    int offset = 0;
    std::vector<Integer> values;
};

BFile parse_bfile(std::istream& in);
BFile read_bfile(const std::filesystem::path& path);
void write_bfile(std::ostream& out, const sequences::SequencePrefix& prefix);
std::string bfile_text(const sequences::SequencePrefix& prefix);

// ---- OEIS cross-check ----

enum class OeisSource { fixture, remote };

/// Fixture file name for a sequence, e.g. "b000957.txt".
std::string fixture_name(sequences::SequenceId id);
/// Minimum number of fixture terms expected for the sequence.
int expected_fixture_terms(sequences::SequenceId id);

/// Compares generated terms with the b-file on every overlapping index.
VerificationReport compare_with_bfile(sequences::SequenceId id, const BFile& bfile, std::string_view label);
VerificationReport oeis_crosscheck(sequences::SequenceId id, OeisSource source,
                                   const std::filesystem::path& fixture_dir);

/// Downloads https://oeis.org/Axxxxxx/bxxxxxx.txt. Throws std::runtime_error
/// on network failure or when the sequence has no OEIS number.
BFile fetch_remote_bfile(sequences::SequenceId id);

}  // namespace htdet::verify
