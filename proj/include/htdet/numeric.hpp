#pragma once

// Exact integer and rational arithmetic plus the combinatorial coefficients
// the rest of the library is written against. Values are immutable once
// built; every free function is pure.

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace htdet {

class Integer {
public:
    Integer() = default;

    template <std::signed_integral T>
    Integer(T v) : value_(static_cast<long>(v)) {}

    template <std::unsigned_integral T>
    Integer(T v) : value_(static_cast<unsigned long>(v)) {}

    explicit Integer(mpz_class v) : value_(std::move(v)) {}

    /// Parses an optional '-' followed by decimal digits. Throws
    /// std::invalid_argument on anything else.
    static Integer parse(std::string_view text);

    std::string to_string() const { return value_.get_str(10); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool fits_long() const { return value_.fits_slong_p(); }
    long to_long() const;

    const mpz_class& raw() const { return value_; }

    Integer operator-() const { return Integer(mpz_class(-value_)); }
    Integer& operator+=(const Integer& o) { value_ += o.value_; return *this; }
    Integer& operator-=(const Integer& o) { value_ -= o.value_; return *this; }
    Integer& operator*=(const Integer& o) { value_ *= o.value_; return *this; }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

/// a / b, throwing std::domain_error if b does not divide a.
Integer exact_div(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& a);
Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);

class Rational {
public:
    Rational() = default;
    Rational(const Integer& v) : value_(v.raw()) {}  // NOLINT: integers embed
    template <std::integral T>
    Rational(T v) : Rational(Integer(v)) {}
    /// Reduced to lowest terms with a positive denominator.
    Rational(const Integer& num, const Integer& den);
    explicit Rational(mpq_class v);

    /// Accepts "p" or "p/q".
    static Rational parse(std::string_view text);

    Integer numerator() const { return Integer(mpz_class(value_.get_num())); }
    Integer denominator() const { return Integer(mpz_class(value_.get_den())); }
    bool is_integer() const { return value_.get_den() == 1; }
    /// Throws std::domain_error when the value is not integral.
    Integer to_integer() const;
    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }

    /// "p" when integral, "p/q" otherwise.
    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

/// C(n, k), zero when k lies outside [0, n].
Integer binomial(long n, long k);

/// (sum parts)! / prod(parts_i!).
Integer multinomial(std::span<const long> parts);

/// base^exp by square-and-multiply; signed_power(x, 0) == 1 for every x.
Integer signed_power(const Integer& base, unsigned long exp);

/// (-1)^k as an int.
constexpr int sign_of_power(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace htdet
