#include "htdet/trudi.hpp"

#include <stdexcept>
#include <string>

#include "kernels/kernels.hpp"

namespace htdet::trudi {

long PartitionMultiplicity::size() const {
    long s = 0;
    for (long c : v) s += c;
    return s;
}

long PartitionMultiplicity::weight() const {
    long w = 0;
    for (std::size_t i = 0; i < v.size(); ++i) w += static_cast<long>(i + 1) * v[i];
    return w;
}

int Composition::total() const {
    int t = 0;
    for (int p : parts) t += p;
    return t;
}

PartitionStream::PartitionStream(int n) : n_(n), v_(n > 0 ? n : 0, 0) {
    if (n < 1) throw std::invalid_argument("partitions_of: n must be positive");
    v_[n - 1] = 1;
}

// Successor in lexicographic order of v: raise the rightmost v_i (i < n) by
// the least amount that leaves a remainder R that parts > i can absorb, then
// complete with the lexicographically smallest tail, which is the single part R.
std::optional<PartitionMultiplicity> PartitionStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        return PartitionMultiplicity{n_, v_};
    }
    std::vector<long> prefix(n_ + 1, 0);  // prefix[i] = sum_{j<=i} j*v_j
    for (int i = 1; i <= n_; ++i) prefix[i] = prefix[i - 1] + i * v_[i - 1];
    for (int i = n_ - 1; i >= 1; --i) {
        for (long bump = 1;; ++bump) {
            const long rest = n_ - (prefix[i - 1] + static_cast<long>(i) * (v_[i - 1] + bump));
            if (rest < 0) break;
            if (rest != 0 && rest < i + 1) continue;
            v_[i - 1] += bump;
            for (int j = i; j < n_; ++j) v_[j] = 0;
            if (rest > 0) v_[rest - 1] = 1;
            return PartitionMultiplicity{n_, v_};
        }
    }
    done_ = true;
    return std::nullopt;
}

CompositionStream::CompositionStream(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("compositions_of: n must be positive");
    if (n > 63) throw std::invalid_argument("compositions_of: n above 63 is not indexable");
    count_ = std::uint64_t{1} << (n - 1);
}

std::optional<Composition> CompositionStream::next() {
    if (mask_ >= count_) return std::nullopt;
    return composition_from_mask(n_, mask_++);
}

Composition composition_from_mask(int n, std::uint64_t mask) {
    Composition c;
    int run = 1;
    for (int j = 0; j < n - 1; ++j) {
        if (mask & (std::uint64_t{1} << j)) {
            c.parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    c.parts.push_back(run);
    return c;
}

PartitionStream partitions_of(int n) { return PartitionStream(n); }
CompositionStream compositions_of(int n) { return CompositionStream(n); }

namespace {

void require_entries(const Integer& a0, std::span<const Integer> a) {
    if (a0.is_zero()) throw std::invalid_argument("trudi: a0 must be nonzero");
    if (a.empty()) throw std::invalid_argument("trudi: need at least one entry");
}

std::vector<Integer> powers_of(const Integer& base, int count) {
    std::vector<Integer> p(count + 1);
    p[0] = Integer(1);
    for (int i = 1; i <= count; ++i) p[i] = p[i - 1] * base;
    return p;
}

Integer composition_sum_serial(const Integer& a0, std::span<const Integer> a) {
    const int n = static_cast<int>(a.size());
    const Integer neg_a0 = -a0;
    Integer total;
    auto stream = compositions_of(n);
    while (auto c = stream.next()) {
        Integer term = signed_power(neg_a0, n - c->parts.size());
        for (int part : c->parts) term *= a[part - 1];
        total += term;
    }
    return total;
}

}  // namespace

Integer trudi_partition_sum(const Integer& a0, std::span<const Integer> a) {
    require_entries(a0, a);
    const int n = static_cast<int>(a.size());
    const Integer neg_a0 = -a0;
    Integer total;
    auto stream = partitions_of(n);
    while (auto p = stream.next()) {
        Integer term = signed_power(neg_a0, n - p->size());
        term *= multinomial(p->v);
        for (int i = 0; i < n && !term.is_zero(); ++i) {
            if (p->v[i] != 0) term *= signed_power(a[i], p->v[i]);
        }
        total += term;
    }
    return total;
}

Integer trudi_composition_sum(const Integer& a0, std::span<const Integer> a, int cap, Execution exec) {
    require_entries(a0, a);
    const int n = static_cast<int>(a.size());
    if (n > cap) {
        throw CapExceeded("trudi_composition_sum: n=" + std::to_string(n) + " exceeds composition cap " +
                          std::to_string(cap));
    }
    if (exec == Execution::serial) return composition_sum_serial(a0, a);
    auto powers = powers_of(-a0, n);
    return composition_sum_parallel(a, powers);
}

}  // namespace htdet::trudi
