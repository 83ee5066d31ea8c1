#include "htdet/series.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "json.hpp"

namespace htdet::series {

PowerSeries PowerSeries::polynomial(std::vector<Rational> coeffs, std::size_t order) {
    for (std::size_t i = order; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_zero()) throw std::domain_error("polynomial has terms at or beyond the requested order");
    }
    coeffs.resize(order);
    return PowerSeries(std::move(coeffs));
}

PowerSeries PowerSeries::from_integers(std::span<const Integer> coeffs) {
    return PowerSeries(std::vector<Rational>(coeffs.begin(), coeffs.end()));
}

std::size_t PowerSeries::valuation() const {
    std::size_t i = 0;
    while (i < coeffs_.size() && coeffs_[i].is_zero()) ++i;
    return i;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
    if (order > coeffs_.size()) throw std::domain_error("cannot extend a series past its known order");
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order)));
}

std::vector<Integer> PowerSeries::integer_coefficients() const {
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_integer());
    return out;
}

std::string PowerSeries::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) out += " + ";
        out += coeffs_[i].to_string();
        if (i == 1) out += "*x";
        if (i > 1) out += "*x^" + std::to_string(i);
    }
    return out;
}

std::string PowerSeries::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_) arr.push_back(c.to_string());
    return arr.dump();
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Rational> c(order);
    for (std::size_t i = 0; i < order; ++i) c[i] = a[i] + b[i];
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a) {
    std::vector<Rational> c(a.coefficients().begin(), a.coefficients().end());
    for (auto& v : c) v = -v;
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Rational> c(order);
    for (std::size_t i = 0; i < order; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < order; ++j) c[i + j] += a[i] * b[j];
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const Rational& k, const PowerSeries& a) {
    std::vector<Rational> c(a.coefficients().begin(), a.coefficients().end());
    for (auto& v : c) v *= k;
    return PowerSeries(std::move(c));
}

PowerSeries shift(const PowerSeries& a, long k) {
    if (k >= 0) {
        std::vector<Rational> c(static_cast<std::size_t>(k));
        c.insert(c.end(), a.coefficients().begin(), a.coefficients().end());
        return PowerSeries(std::move(c));
    }
    const auto drop = static_cast<std::size_t>(-k);
    if (drop > a.order()) throw std::domain_error("shift drops more coefficients than the series knows");
    for (std::size_t i = 0; i < drop; ++i) {
        if (!a[i].is_zero()) throw std::domain_error("negative shift would drop a nonzero coefficient");
    }
    return PowerSeries(std::vector<Rational>(a.coefficients().begin() + static_cast<long>(drop),
                                             a.coefficients().end()));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t vb = b.valuation();
    if (vb == b.order()) throw std::domain_error("division by a series that is zero to its order");
    if (a.valuation() < vb) throw std::domain_error("quotient is not a power series");
    const PowerSeries num = shift(a, -static_cast<long>(vb));
    const PowerSeries den = shift(b, -static_cast<long>(vb));
    const std::size_t order = std::min(num.order(), den.order());
    std::vector<Rational> q(order);
    const Rational& lead = den[0];
    for (std::size_t i = 0; i < order; ++i) {
        Rational acc = num[i];
        for (std::size_t j = 1; j <= i; ++j) {
            if (!den[j].is_zero()) acc -= den[j] * q[i - j];
        }
        q[i] = acc / lead;
    }
    return PowerSeries(std::move(q));
}

namespace {

Integer integer_sqrt_exact(const Integer& v) {
    if (v.sign() <= 0 || mpz_perfect_square_p(v.raw().get_mpz_t()) == 0) {
        throw std::domain_error("constant term is not the square of a nonzero rational");
    }
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), v.raw().get_mpz_t());
    return Integer(std::move(r));
}

PowerSeries padded(const PowerSeries& a, std::size_t order) {
    std::vector<Rational> c(a.coefficients().begin(), a.coefficients().end());
    c.resize(order);
    return PowerSeries(std::move(c));
}

}  // namespace

PowerSeries sqrt(const PowerSeries& a) {
    if (a.order() == 0) return a;
    const Rational root(integer_sqrt_exact(a[0].numerator()), integer_sqrt_exact(a[0].denominator()));
    const Rational half(Integer(1), Integer(2));
    PowerSeries y({root});
    std::size_t known = 1;
    while (known < a.order()) {
        known = std::min(2 * known, a.order());
        PowerSeries guess = padded(y, known);
        y = half * (guess + a.truncated(known) / guess);
    }
    return y;
}

PowerSeries f_from_g(const PowerSeries& g) {
    if (g.order() == 0) return g;
    if (!g[0].is_zero()) throw std::domain_error("f_from_g: g must have zero constant term");
    const PowerSeries one = PowerSeries::polynomial({Rational(1)}, g.order());
    return g / (one - g);
}

PowerSeries g_from_entries(const Integer& a0, std::span<const Integer> entries) {
    std::vector<Rational> c(entries.size() + 1);
    Integer weight(1);
    const Integer neg_a0 = -a0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        c[i + 1] = Rational(weight * entries[i]);
        weight *= neg_a0;
    }
    return PowerSeries(std::move(c));
}

namespace {

constexpr std::array<std::string_view, 5> gf_names = {"LargeSchroeder", "SmallSchroeder", "Fine", "Catalan",
                                                      "A134425"};

// Terms at or past the order do not affect the result modulo x^order.
PowerSeries poly(std::initializer_list<long> coeffs, std::size_t order) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    c.resize(std::max(c.size(), order));
    c.resize(order);
    return PowerSeries(std::move(c));
}

}  // namespace

std::string_view gf_name(GeneratingFunction id) { return gf_names[static_cast<std::size_t>(id)]; }

std::optional<GeneratingFunction> parse_gf(std::string_view name) {
    for (std::size_t i = 0; i < gf_names.size(); ++i) {
        if (gf_names[i] == name) return static_cast<GeneratingFunction>(i);
    }
    return std::nullopt;
}

PowerSeries gf_catalog(GeneratingFunction id, std::size_t order) {
    if (order < 1) throw std::invalid_argument("gf_catalog: order must be at least 1");
    // Forms with a 1/x factor are evaluated one order higher so the
    // cancellation lands on the requested order.
    const std::size_t up = order + 1;
    switch (id) {
        case GeneratingFunction::LargeSchroeder:
            return (poly({1, -1}, up) - sqrt(poly({1, -6, 1}, up))) / poly({0, 2}, up);
        case GeneratingFunction::SmallSchroeder:
            return (poly({1, 1}, up) - sqrt(poly({1, -6, 1}, up))) / poly({0, 4}, up);
        case GeneratingFunction::Fine:
            return (poly({1, 2}, order) - sqrt(poly({1, -4}, order))) / poly({4, 2}, order);
        case GeneratingFunction::Catalan:
            return (poly({1}, up) - sqrt(poly({1, -4}, up))) / poly({0, 2}, up);
        case GeneratingFunction::A134425:
            return poly({2}, order) / (poly({1, -7}, order) + sqrt(poly({1, -6, 1}, order)));
    }
    throw std::invalid_argument("unknown generating function");
}

}  // namespace htdet::series
