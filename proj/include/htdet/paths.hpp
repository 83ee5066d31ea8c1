#pragma once

// Exhaustive enumeration of Schröder, Dyck and Fine lattice paths, their
// marked/coloured variants and tuple families, with per-member signs. This is
// the brute-force side of every combinatorial claim the library checks.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "htdet/errors.hpp"
#include "htdet/execution.hpp"
#include "htdet/numeric.hpp"

namespace htdet::paths {

enum class StepKind : std::uint8_t { U, D, H };

/// One step. `marked` and `color` (0 = none) are decorations; which steps may
/// carry them depends on the family.
struct Step {
    StepKind kind = StepKind::U;
    bool marked = false;
    std::uint8_t color = 0;

    friend bool operator==(const Step&, const Step&) = default;
};

/// A word over {u, d, h}. Length is #u + #h, i.e. half the horizontal
/// distance (h spans two columns).
class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

    /// Parses space-separated tokens such as "u d h':2" (mark "'", colour ":k").
    static LatticePath parse(std::string_view text);
    std::string to_string() const;

    std::span<const Step> steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    const Step& operator[](std::size_t i) const { return steps_[i]; }
    Step& operator[](std::size_t i) { return steps_[i]; }
    const Step& back() const { return steps_.back(); }

    int length() const;
    /// Never below the axis and ends at height 0.
    bool is_valid() const;
    /// heights()[i] is the height before step i; one extra entry for the end.
    std::vector<int> heights() const;

    void push(Step s) { steps_.push_back(s); }
    void pop() { steps_.pop_back(); }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    std::vector<Step> steps_;
};

enum class Family {
    P,        // Schröder paths
    Q,        // restricted: no low h
    D,        // Dyck
    E,        // Dyck, no peak of height 1
    A,        // Schröder, returns markable, final return marked
    Aprime,   // A without low h
    B,        // A where every marked return is a low h (final step a marked low h)
    Bprime,   // B with every low h marked
    Dprime,   // Dyck with last unit ud
    L,        // E with units 2.. markable, first unit unmarked
    Pstar3,   // Schröder, each low h in one of 3 colours
    Ptilde4,  // Schröder, each low h in one of 4 kinds
    Jtuple,   // k-tuples of Q paths of length >= 2, total n + k
    Mtuple,   // k-tuples of nonempty E paths, total n + k
    Ttuple,   // k-tuples of E paths of length >= 3, total n + 2k
};

inline constexpr Family all_families[] = {
    Family::P,      Family::Q, Family::D,      Family::E,       Family::A,
    Family::Aprime, Family::B, Family::Bprime, Family::Dprime,  Family::L,
    Family::Pstar3, Family::Ptilde4, Family::Jtuple, Family::Mtuple, Family::Ttuple,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
bool is_tuple_family(Family f);
/// Plain families carry no marks, colours or tuple structure.
bool is_plain_family(Family f);

struct PathFamily {
    Family tag;
    int n;
};

struct Unit {
    std::size_t begin = 0;  // first step index
    std::size_t end = 0;    // one past the return step

    friend bool operator==(const Unit&, const Unit&) = default;
};

struct PathStats {
    int returns = 0;          // h or d steps ending on the axis
    int low_h = 0;            // h steps at height 0
    int peaks_h1 = 0;         // u ending at height 1 followed by d
    int special_valleys = 0;  // d followed by u starting at height 1
    std::vector<Unit> units;  // one per return
    bool primitive = true;    // no non-terminal return
    int short_units = 0;      // units equal to ud
    int marked_returns = 0;
    int marked_low_h = 0;
};

PathStats stats(const LatticePath& path);

struct EnumerationCaps {
    int plain = 12;
    int decorated = 9;
};

/// One member of a family: a single path, or a tuple for J/M/T.
struct Member {
    std::span<const LatticePath* const> components;
    int sign = 1;

    const LatticePath& path() const { return *components.front(); }
};

using MemberVisitor = std::function<void(const Member&)>;

/// Visits every member of the family exactly once in a fixed order.
/// Throws CapExceeded past the family's cap.
void enumerate(PathFamily family, const MemberVisitor& visit, EnumerationCaps caps = {});

/// Materialised members, for small n (tests, CLI dumps).
std::vector<std::vector<LatticePath>> collect(PathFamily family, EnumerationCaps caps = {});

/// Sign carried by a member under the family's convention (+1 for unsigned
/// families).
int member_sign(PathFamily family, std::span<const LatticePath> components);

/// Membership predicate written from the family definitions alone.
bool is_member(PathFamily family, std::span<const LatticePath> components);

std::string member_to_string(const Member& m);

struct Tally {
    Integer cardinality;
    Integer signed_sum;
};

Tally tally(PathFamily family, EnumerationCaps caps = {}, Execution exec = Execution::parallel);
Integer family_cardinality(PathFamily family, EnumerationCaps caps = {},
                           Execution exec = Execution::parallel);
Integer family_signed_sum(PathFamily family, EnumerationCaps caps = {},
                          Execution exec = Execution::parallel);

/// a(m, j): Dyck paths of length m with exactly j returns, by enumeration.
Integer dyck_return_count(int m, int j, EnumerationCaps caps = {});

/// sum_{j=1}^{floor((n+2)/2)} a(n+2-j, j).
Integer a030238_sum(int n, EnumerationCaps caps = {});

/// Weights for transfer counting of Schröder paths by height state.
struct SchroederWeights {
    Integer low_h = Integer(1);  // multiplicity of each low h (0 forbids them)
    bool allow_h = true;
    bool allow_hills = true;     // hill = a ud unit
};

/// Weighted count of Schröder paths of length n by a height-state transfer
/// recurrence; no path is materialised. Used where exhaustive enumeration is
/// out of reach and checked against enumerate() for small n.
Integer transfer_count(int n, const SchroederWeights& weights);

}  // namespace htdet::paths
