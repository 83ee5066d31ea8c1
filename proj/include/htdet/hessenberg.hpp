#pragma once

// Hessenberg-Toeplitz determinants.
//
// A_n(a0; a1..an) has a_{i-j+1} in cell (i, j) for j <= i, a0 on the
// superdiagonal and zeros above it.

#include <span>
#include <string>
#include <vector>

#include "htdet/execution.hpp"
#include "htdet/numeric.hpp"
#include "htdet/sequences.hpp"

namespace htdet::hessenberg {

struct HTSpec {
    Integer a0;
    std::vector<Integer> entries;  // a_1 .. a_n

    std::size_t n() const { return entries.size(); }
};

class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n) : n_(n), cells_(n * n) {}

    std::size_t size() const { return n_; }
    Integer& operator()(std::size_t i, std::size_t j) { return cells_.at(i * n_ + j); }
    const Integer& operator()(std::size_t i, std::size_t j) const { return cells_.at(i * n_ + j); }
    const std::vector<Integer>& cells() const { return cells_; }

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<Integer> cells_;
};

DenseMatrix build_matrix(const HTSpec& spec);

/// D_m = sum_{k=1}^{m} (-a0)^(k-1) a_k D_{m-k}, D_0 = 1. Linear memory.
Integer det_recurrence(const HTSpec& spec);
/// D_0 .. D_n of the leading principal submatrices.
std::vector<Integer> forward_dets(const HTSpec& spec);

struct EliminationTrace {
    Integer determinant;
    int row_swaps = 0;
};

/// Fraction-free elimination of the dense matrix, with a row exchange
/// whenever a pivot vanishes. The empty matrix has determinant 1.
EliminationTrace det_fraction_free_traced(const DenseMatrix& m, Execution exec = Execution::parallel);
Integer det_fraction_free(const DenseMatrix& m, Execution exec = Execution::parallel);
Integer det_fraction_free(const HTSpec& spec, Execution exec = Execution::parallel);

Integer d_plus(std::span<const Integer> entries);
Integer d_minus(std::span<const Integer> entries);

/// Given b_0 = 1, b_1 .. b_n, the unique a_1 .. a_n with D+(a_1..a_m) = b_m
/// for every m. Throws std::invalid_argument when b_0 != 1.
std::vector<Integer> invert_sequence(std::span<const Integer> b);

/// det(seq_{i+j+offset})_{0<=i,j<n}; n = 0 gives 1.
Integer hankel_det(sequences::SequenceId seq, int offset, int n);

/// (-1)^(n-1) det A_n(1; C_0 .. C_{n-1}), which equals t_n.
Integer deutsch_fine(int n);

}  // namespace htdet::hessenberg
