// OpenMP kernel: Trudi composition sum over a range of cut masks.

#include <cstdint>
#include <span>

#include "kernels/kernels.hpp"

namespace htdet::trudi {

Integer composition_sum_parallel(std::span<const Integer> a, std::span<const Integer> sign_powers) {
    const int n = static_cast<int>(a.size());
    const std::int64_t count = std::int64_t{1} << (n - 1);
    Integer total;

#pragma omp parallel
    {
        Integer local;
        Integer term;
#pragma omp for schedule(static)
        for (std::int64_t mask = 0; mask < count; ++mask) {
            term = Integer(1);
            int parts = 0;
            int run = 1;
            for (int j = 0; j < n - 1; ++j) {
                if (mask & (std::int64_t{1} << j)) {
                    term *= a[run - 1];
                    ++parts;
                    run = 1;
                } else {
                    ++run;
                }
            }
            term *= a[run - 1];
            ++parts;
            term *= sign_powers[n - parts];
            local += term;
        }
#pragma omp critical(htdet_composition_sum)
        total += local;
    }
    return total;
}

}  // namespace htdet::trudi
