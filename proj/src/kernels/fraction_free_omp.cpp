// OpenMP kernel: one-step fraction-free (Bareiss) elimination. Every division
// by the previous pivot is exact, so all intermediates stay integral.

#include <cstdint>
#include <utility>

#include "kernels/kernels.hpp"

namespace htdet::kernels {

Integer fraction_free_parallel(std::vector<Integer> cells, std::size_t n, int* swaps) {
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return cells[i * n + j]; };
    int sign = 1;
    int exchanges = 0;
    Integer previous(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && at(r, k).is_zero()) ++r;
            if (r == n) {
                if (swaps) *swaps = exchanges;
                return Integer(0);
            }
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
            sign = -sign;
            ++exchanges;
        }
        const Integer pivot = at(k, k);
        const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
        for (std::int64_t i = static_cast<std::int64_t>(k) + 1; i < rows; ++i) {
            const auto r = static_cast<std::size_t>(i);
            const Integer factor = at(r, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                at(r, j) = exact_div(at(r, j) * pivot - factor * at(k, j), previous);
            }
            at(r, k) = Integer(0);
        }
        previous = pivot;
    }
    if (swaps) *swaps = exchanges;
    return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

}  // namespace htdet::kernels
