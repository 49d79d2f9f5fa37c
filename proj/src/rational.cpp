#include "uncert/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace uncert {

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    std::string text(s);
    if (!text.empty() && text[0] == '+') text.erase(0, 1);
    return mpz_class(text, 10);
}

[[noreturn]] void bad_rational(std::string_view text) {
    throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
}

// [sign] digits [. digits] [(e|E) [sign] digits]
Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    std::size_t frac_digits = 0;
    bool seen_point = false;
    std::size_t i = 0;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) ++frac_digits;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (digits.empty()) bad_rational(text);
    long exponent = 0;
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') bad_rational(text);
        const std::string_view exp_text = s.substr(i + 1);
        if (!is_integer_text(exp_text) || exp_text.size() > 6) bad_rational(text);
        exponent = std::stol(std::string(exp_text));
    }
    mpz_class mantissa(digits, 10);
    if (negative) mantissa = -mantissa;
    const long scale = exponent - static_cast<long>(frac_digits);
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    mpq_class q = scale < 0 ? mpq_class(mantissa, ten_pow) : mpq_class(mantissa * ten_pow);
    q.canonicalize();
    return Rational(q);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) {
    if (sgn(value_.get_den()) == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) bad_rational(text);

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
            bad_rational(text);
        }
        const mpz_class d = parse_integer(den);
        if (sgn(d) == 0) throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
        mpq_class q(parse_integer(num), d);
        q.canonicalize();
        return Rational(q);
    }
    if (is_integer_text(text)) return Rational(parse_integer(text));
    return parse_decimal(text);
}

// Truncates toward zero: within one ulp of the exact value.
double Rational::to_double() const { return value_.get_d(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& q, unsigned exponent) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), q.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), q.raw().get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

Rational factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

}  // namespace uncert
