#pragma once

// Truncated formal power series with exact rational coefficients.
//
// A series of order M knows its coefficients for x^0 .. x^(M-1) and nothing
// beyond; results of arithmetic never claim more than their inputs justify.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "htdet/numeric.hpp"

namespace htdet::series {

class PowerSeries {
public:
    PowerSeries() = default;
    /// Coefficients of x^0 .. x^(size-1); order is coeffs.size().
    explicit PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    /// A polynomial known exactly, zero-padded to the requested order.
    static PowerSeries polynomial(std::vector<Rational> coeffs, std::size_t order);
    static PowerSeries from_integers(std::span<const Integer> coeffs);

    std::size_t order() const { return coeffs_.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    std::span<const Rational> coefficients() const { return coeffs_; }
    /// Index of the first nonzero coefficient, or order() when none is known.
    std::size_t valuation() const;

    PowerSeries truncated(std::size_t order) const;

    /// Coefficients as integers; throws std::domain_error on a fraction.
    std::vector<Integer> integer_coefficients() const;

    /// "c0 + c1*x + c2*x^2 + ..." with every known coefficient.
    std::string to_string() const;
    /// JSON array of coefficient strings.
    std::string to_json() const;

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const Rational& c, const PowerSeries& a);
/// Cancels a common x^k first. Throws std::domain_error when b is zero to
/// its order or when a has lower valuation than b.
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

/// Multiplies by x^k. Negative k drops leading coefficients, which must be
/// zero (std::domain_error otherwise).
PowerSeries shift(const PowerSeries& a, long k);

/// The series y with y*y == a and y(0) = +sqrt(a(0)), by Newton iteration
/// with doubling precision. Requires a(0) to be the square of a nonzero
/// rational.
PowerSeries sqrt(const PowerSeries& a);

/// g / (1 - g) for g with zero constant term.
PowerSeries f_from_g(const PowerSeries& g);

/// g(x) = sum_{i>=1} (-a0)^(i-1) a_i x^i for a given [a_1 .. a_n]; order n+1.
PowerSeries g_from_entries(const Integer& a0, std::span<const Integer> entries);

enum class GeneratingFunction { LargeSchroeder, SmallSchroeder, Fine, Catalan, A134425 };

std::string_view gf_name(GeneratingFunction id);
std::optional<GeneratingFunction> parse_gf(std::string_view name);

/// The named generating function expanded to the given order.
PowerSeries gf_catalog(GeneratingFunction id, std::size_t order);

}  // namespace htdet::series
