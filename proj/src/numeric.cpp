#include "htdet/numeric.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace htdet {

namespace {

bool is_decimal(std::string_view text) {
    if (text.empty()) return false;
    std::size_t i = text.front() == '-' ? 1 : 0;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

}  // namespace

Integer Integer::parse(std::string_view text) {
    if (!is_decimal(text)) {
        throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
    return Integer(mpz_class(std::string(text), 10));
}

long Integer::to_long() const {
    if (!fits_long()) throw std::overflow_error("integer does not fit in long: " + to_string());
    return value_.get_si();
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Integer exact_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (!divides(b, a)) {
        throw std::domain_error("inexact division: " + a.to_string() + " / " + b.to_string());
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(q));
}

bool divides(const Integer& d, const Integer& a) {
    if (d.is_zero()) return a.is_zero();
    return mpz_divisible_p(a.raw().get_mpz_t(), d.raw().get_mpz_t()) != 0;
}

Integer abs(const Integer& a) { return Integer(mpz_class(::abs(a.raw()))); }

Integer gcd(const Integer& a, const Integer& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(g));
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num.raw(), den.raw());
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer::parse(text));
    auto den = Integer::parse(text.substr(slash + 1));
    return Rational(Integer::parse(text.substr(0, slash)), den);
}

Integer Rational::to_integer() const {
    if (!is_integer()) throw std::domain_error("rational is not integral: " + to_string());
    return numerator();
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str(10);
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

Integer binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
    if (k < 0 || k > n) return Integer(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Integer(std::move(r));
}

Integer multinomial(std::span<const long> parts) {
    Integer result(1);
    long total = 0;
    for (long p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        total += p;
        result *= binomial(total, p);
    }
    return result;
}

Integer signed_power(const Integer& base, unsigned long exp) {
    Integer result(1);
    Integer square = base;
    while (exp != 0) {
        if (exp & 1UL) result *= square;
        exp >>= 1;
        if (exp != 0) square *= square;
    }
    return result;
}

}  // namespace htdet
