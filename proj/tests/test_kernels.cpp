#include <omp.h>

#include <vector>

#include "doctest.h"
#include "htdet/hessenberg.hpp"
#include "htdet/paths.hpp"
#include "htdet/trudi.hpp"
#include "oracles.hpp"

using htdet::Execution;
using htdet::Integer;

namespace {

struct ThreadScope {
    int saved = omp_get_max_threads();
    explicit ThreadScope(int n) { omp_set_num_threads(n); }
    ~ThreadScope() { omp_set_num_threads(saved); }
};

}  // namespace

TEST_CASE("thread count is visible") {
    ThreadScope scope(3);
    CHECK(htdet::max_threads() == 3);
}

TEST_CASE("parallel fraction-free elimination matches the serial reference") {
    for (int threads : {1, 2, 4}) {
        ThreadScope scope(threads);
        for (int trial = 0; trial < 40; ++trial) {
            const long n = oracle::uniform(1, 24);
            htdet::hessenberg::DenseMatrix m(static_cast<std::size_t>(n));
            for (long i = 0; i < n; ++i) {
                for (long j = 0; j < n; ++j) m(i, j) = Integer(oracle::uniform(-3, 3));
            }
            const auto serial = htdet::hessenberg::det_fraction_free_traced(m, Execution::serial);
            const auto parallel = htdet::hessenberg::det_fraction_free_traced(m, Execution::parallel);
            CHECK(serial.determinant == parallel.determinant);
            CHECK(serial.row_swaps == parallel.row_swaps);
        }
    }
}

TEST_CASE("parallel composition sum matches the serial reference") {
    for (int threads : {1, 2, 4}) {
        ThreadScope scope(threads);
        for (int n = 1; n <= 16; ++n) {
            std::vector<Integer> a;
            for (int i = 0; i < n; ++i) a.emplace_back(oracle::uniform(-9, 9));
            for (long a0 : {1L, -1L, 2L}) {
                CHECK(htdet::trudi::trudi_composition_sum(Integer(a0), a, 22, Execution::serial) ==
                      htdet::trudi::trudi_composition_sum(Integer(a0), a, 22, Execution::parallel));
            }
        }
    }
}

TEST_CASE("parallel path tallies match the serial reference") {
    for (int threads : {1, 3}) {
        ThreadScope scope(threads);
        for (auto f : htdet::paths::all_families) {
            for (int n = 1; n <= 6; ++n) {
                const auto serial = htdet::paths::tally({f, n}, {}, Execution::serial);
                const auto parallel = htdet::paths::tally({f, n}, {}, Execution::parallel);
                CHECK_MESSAGE(serial.cardinality == parallel.cardinality, htdet::paths::family_name(f) << " n=" << n);
                CHECK_MESSAGE(serial.signed_sum == parallel.signed_sum, htdet::paths::family_name(f) << " n=" << n);
            }
        }
    }
}
