#pragma once

// OpenMP kernels. Each has a serial reference elsewhere in the library that
// the tests and bench/ compare it against.

#include <span>
#include <vector>

#include "htdet/numeric.hpp"
#include "htdet/paths.hpp"

namespace htdet::kernels {

/// Fraction-free elimination on a row-major n x n matrix, rows of each
/// elimination step updated in parallel. Returns the determinant; `swaps`
/// receives the number of row exchanges.
Integer fraction_free_parallel(std::vector<Integer> cells, std::size_t n, int* swaps);

/// Cardinality and signed sum of a path family, with the depth-first search
/// split into independent subtrees (or composition ranges for tuples).
paths::Tally tally_parallel(paths::PathFamily family);

}  // namespace htdet::kernels

namespace htdet::trudi {

/// Trudi composition sum over all 2^(n-1) cut masks, split across threads.
/// sign_powers[j] holds (-a0)^j for 0 <= j <= n.
Integer composition_sum_parallel(std::span<const Integer> a, std::span<const Integer> sign_powers);

}  // namespace htdet::trudi
