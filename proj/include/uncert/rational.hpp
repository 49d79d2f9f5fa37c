#pragma once

// Exact arbitrary-precision rational scalar.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace uncert {

/// Arbitrary-precision rational number, always held in lowest terms with a
/// positive denominator (zero is 0/1).
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpq_class& q);
    explicit Rational(const mpz_class& z) : value_(z) {}

    /// Parses "num/den", an integer, or a finite decimal literal such as
    /// "-0.0095109093" or "1.5e-3". Decimal input is converted exactly.
    /// Throws std::invalid_argument on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    /// "num/den", or "num" when the denominator is one.
    [[nodiscard]] std::string str() const { return value_.get_str(); }
    [[nodiscard]] double to_double() const;

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

[[nodiscard]] Rational abs(const Rational& q);
[[nodiscard]] Rational pow(const Rational& q, unsigned exponent);
[[nodiscard]] Rational min(const Rational& a, const Rational& b);
[[nodiscard]] Rational max(const Rational& a, const Rational& b);

/// Binomial coefficient C(n, k) as an exact integer-valued rational.
[[nodiscard]] Rational binomial(unsigned n, unsigned k);
/// n! as an exact integer-valued rational.
[[nodiscard]] Rational factorial(unsigned n);

}  // namespace uncert
