#pragma once

// Named integer sequences, each reachable by more than one route so that the
// routes can be checked against one another.

#include <optional>
#include <string_view>
#include <vector>

#include "htdet/numeric.hpp"

namespace htdet::sequences {

enum class SequenceId {
    LargeSchroeder,  // S_n, A006318
    SmallSchroeder,  // s_n, A001003
    Fine,            // t_n, A000957
    Catalan,         // C_n, A000108
    U,               // u_n = D+(t_1..t_n)
    A137398,         // b_n
    A134425,
    A225887,
    A114710,
    A030238,
};

inline constexpr SequenceId all_sequences[] = {
    SequenceId::LargeSchroeder, SequenceId::SmallSchroeder, SequenceId::Fine,    SequenceId::Catalan,
    SequenceId::U,              SequenceId::A137398,        SequenceId::A134425, SequenceId::A225887,
    SequenceId::A114710,        SequenceId::A030238,
};

std::string_view sequence_name(SequenceId id);
/// Accepts the names above or an OEIS A-number ("A006318").
std::optional<SequenceId> parse_sequence(std::string_view text);
/// OEIS A-number, when the sequence has one.
std::optional<std::string_view> oeis_number(SequenceId id);
/// Smallest valid index (1 for U and A137398, else 0).
int first_index(SequenceId id);

enum class Source { closed_form, recurrence, series, enumeration, determinant };

std::string_view source_name(Source s);
std::optional<Source> parse_source(std::string_view text);

struct SequencePrefix {
    SequenceId id;
    Source source;
    int offset = 0;               // index of values.front()
    std::vector<Integer> values;

    int last_index() const { return offset + static_cast<int>(values.size()) - 1; }
    const Integer& at(int n) const { return values.at(static_cast<std::size_t>(n - offset)); }
};

Integer catalan(int n);
/// C_n by the convolution C_n = sum C_k C_{n-1-k}.
Integer catalan_via_convolution(int n);
Integer large_schroeder(int n);
Integer small_schroeder(int n);
Integer fine(int n);
/// t_n from t_{n+1} = C_n - sum_{k<n} C_k t_{n-k}, seeded t_0 = 0.
Integer fine_via_catalan(int n);
/// Returns t_{n+1} = 1/2 sum_{k=2}^{n} C_k / (-2)^(n-k), for n >= 1.
Integer fine_half_alternating(int n);
/// S_n = sum_k binom(n+k, 2k) C_k.
Integer schroeder_via_catalan(int n);
/// u_1 = u_2 = 1, u_n = u_{n-1} + sum_{i=1}^{n-2} (-1)^(i+1) C_i u_{n-i-1}.
Integer u_sequence(int n);
/// b_1 = 0, b_2 = 1, b_n = C_{n-1} + 2 sum_{k=1}^{n-3} C_k b_{n-k-1}.
Integer a137398(int n);
/// Whether b_n = 2b_{n-1} + 2b_{n-2} + sum_{k=1}^{n-3} C_k b_{n-k-1} holds (n >= 4).
bool a137398_second_recurrence_holds(int n);

/// A134425 (generating function), A225887 (3-coloured low h), A114710 (no
/// low h, no hill) or A030238 (Catalan-triangle sum over Dyck paths).
Integer auxiliary_sequence(SequenceId id, int n);

/// C_n == 2 t_{n+1} + t_n.
bool check_catalan_fine_relation(int n);

/// Term by the sequence's primary route.
Integer term(SequenceId id, int n);

/// Routes implemented for a sequence.
std::vector<Source> sources_for(SequenceId id);

/// Terms first_index(id) .. last_index via the requested route. Throws
/// std::invalid_argument for a route the sequence lacks.
SequencePrefix prefix(SequenceId id, int last_index, Source source);

}  // namespace htdet::sequences
