#pragma once

// Trudi's expansion of a Hessenberg–Toeplitz determinant, evaluated both over
// integer partitions (multiplicity vectors) and over compositions.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "htdet/errors.hpp"
#include "htdet/execution.hpp"
#include "htdet/numeric.hpp"

namespace htdet::trudi {

/// Multiplicity vector v of a partition of n: v[i-1] copies of part i,
/// so sum(i * v[i-1]) == n.
struct PartitionMultiplicity {
    int n = 0;
    std::vector<long> v;

    long size() const;    // |v|, the number of parts
    long weight() const;  // sum i * v_i
};

/// An ordered list of positive parts.
struct Composition {
    std::vector<int> parts;

    int total() const;
};

/// Yields every partition of n once, in increasing lexicographic order of v.
class PartitionStream {
public:
    explicit PartitionStream(int n);
    std::optional<PartitionMultiplicity> next();

private:
    int n_;
    std::vector<long> v_;
    bool started_ = false;
    bool done_ = false;
};

/// Compositions of n indexed by the (n-1)-bit cut mask: bit j set means a
/// cut after the (j+1)-th unit. Mask 0 is the single part (n).
class CompositionStream {
public:
    explicit CompositionStream(int n);
    std::optional<Composition> next();
    std::uint64_t count() const { return count_; }

private:
    int n_;
    std::uint64_t mask_ = 0;
    std::uint64_t count_;
};

Composition composition_from_mask(int n, std::uint64_t mask);

PartitionStream partitions_of(int n);
CompositionStream compositions_of(int n);

/// Sum over partitions of n of (-a0)^(n-|v|) * multinomial(v) * prod a_i^v_i.
Integer trudi_partition_sum(const Integer& a0, std::span<const Integer> a);

inline constexpr int default_composition_cap = 22;

/// Sum over compositions (i_1..i_k) of n of (-a0)^(n-k) a_{i_1}...a_{i_k}.
/// Throws htdet::CapExceeded when n is above the cap.
Integer trudi_composition_sum(const Integer& a0, std::span<const Integer> a,
                              int cap = default_composition_cap,
                              Execution exec = Execution::parallel);

}  // namespace htdet::trudi
