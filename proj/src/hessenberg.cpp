#include "htdet/hessenberg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "kernels/kernels.hpp"

namespace htdet::hessenberg {

std::string DenseMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (j > 0) os << ' ';
            os << (*this)(i, j);
        }
        os << '\n';
    }
    return os.str();
}

namespace {

void validate(const HTSpec& spec) {
    if (spec.a0.is_zero()) throw std::invalid_argument("HTSpec: a0 must be nonzero");
    if (spec.entries.empty()) throw std::invalid_argument("HTSpec: entries must be nonempty");
}

}  // namespace

DenseMatrix build_matrix(const HTSpec& spec) {
    validate(spec);
    const std::size_t n = spec.n();
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i + 1 < n) m(i, i + 1) = spec.a0;
        for (std::size_t j = 0; j <= i; ++j) m(i, j) = spec.entries[i - j];
    }
    return m;
}

std::vector<Integer> forward_dets(const HTSpec& spec) {
    const std::size_t n = spec.n();
    std::vector<Integer> powers{Integer(1)};
    const Integer neg_a0 = -spec.a0;
    for (std::size_t k = 1; k < n; ++k) powers.push_back(powers.back() * neg_a0);

    std::vector<Integer> d{Integer(1)};
    d.reserve(n + 1);
    for (std::size_t m = 1; m <= n; ++m) {
        Integer sum;
        for (std::size_t k = 1; k <= m; ++k) {
            if (spec.entries[k - 1].is_zero() || d[m - k].is_zero()) continue;
            sum += powers[k - 1] * spec.entries[k - 1] * d[m - k];
        }
        d.push_back(std::move(sum));
    }
    return d;
}

Integer det_recurrence(const HTSpec& spec) {
    validate(spec);
    return forward_dets(spec).back();
}

namespace {

EliminationTrace fraction_free_serial(std::vector<Integer> cells, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return cells[i * n + j]; };
    EliminationTrace trace;
    bool negate = false;
    Integer previous(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && at(r, k).is_zero()) ++r;
            if (r == n) return trace;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
            negate = !negate;
            ++trace.row_swaps;
        }
        const Integer pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Integer factor = at(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                at(i, j) = exact_div(at(i, j) * pivot - factor * at(k, j), previous);
            }
            at(i, k) = Integer(0);
        }
        previous = pivot;
    }
    trace.determinant = negate ? -at(n - 1, n - 1) : at(n - 1, n - 1);
    return trace;
}

}  // namespace

EliminationTrace det_fraction_free_traced(const DenseMatrix& m, Execution exec) {
    const std::size_t n = m.size();
    if (n == 0) return {Integer(1), 0};
    if (exec == Execution::serial) return fraction_free_serial(m.cells(), n);
    EliminationTrace trace;
    trace.determinant = kernels::fraction_free_parallel(m.cells(), n, &trace.row_swaps);
    return trace;
}

Integer det_fraction_free(const DenseMatrix& m, Execution exec) {
    return det_fraction_free_traced(m, exec).determinant;
}

Integer det_fraction_free(const HTSpec& spec, Execution exec) { return det_fraction_free(build_matrix(spec), exec); }

Integer d_plus(std::span<const Integer> entries) {
    return det_recurrence({Integer(1), {entries.begin(), entries.end()}});
}

Integer d_minus(std::span<const Integer> entries) {
    return det_recurrence({Integer(-1), {entries.begin(), entries.end()}});
}

std::vector<Integer> invert_sequence(std::span<const Integer> b) {
    if (b.empty() || b.front() != Integer(1)) {
        throw std::invalid_argument("invert_sequence: b_0 must equal 1");
    }
    // a_m is D+ of b_1 .. b_m.
    auto dets = forward_dets({Integer(1), {b.begin() + 1, b.end()}});
    dets.erase(dets.begin());
    return dets;
}

Integer hankel_det(sequences::SequenceId seq, int offset, int n) {
    if (n < 0) throw std::invalid_argument("hankel_det: size must be non-negative");
    if (offset < sequences::first_index(seq)) {
        throw std::invalid_argument("hankel_det: offset precedes the first term");
    }
    std::vector<Integer> terms;
    for (int k = 0; k <= 2 * (n - 1); ++k) terms.push_back(sequences::term(seq, offset + k));
    const auto size = static_cast<std::size_t>(n);
    DenseMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) m(i, j) = terms[i + j];
    }
    return det_fraction_free(m);
}

Integer deutsch_fine(int n) {
    if (n < 1) throw std::invalid_argument("deutsch_fine: n must be at least 1");
    HTSpec spec{Integer(1), {}};
    for (int k = 0; k < n; ++k) spec.entries.push_back(sequences::catalan(k));
    const Integer det = det_fraction_free(spec);
    return n % 2 == 1 ? det : -det;
}

}  // namespace htdet::hessenberg
