#pragma once

// Dense single-variable polynomials with exact rational coefficients.

#include "uncert/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace uncert {

/// Polynomial with coefficients in ascending degree order. The canonical
/// zero polynomial has no coefficients; otherwise the leading coefficient is
/// nonzero.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    /// x^n
    static Polynomial monomial(std::size_t n, const Rational& c = Rational(1));

    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of x^i (zero beyond the degree).
    [[nodiscard]] Rational operator[](std::size_t i) const;

    /// Horner evaluation.
    [[nodiscard]] Rational operator()(const Rational& x) const;
    [[nodiscard]] double operator()(double x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable ascending form, e.g. "1 - 2*x + x^2".
    [[nodiscard]] std::string str() const;

private:
    void canonicalize();
    std::vector<Rational> coeffs_;
};

/// q(x) = p(s*x + r), by exact binomial expansion.
[[nodiscard]] Polynomial compose_affine(const Polynomial& p, const Rational& s, const Rational& r);

/// Formal derivative.
[[nodiscard]] Polynomial derivative(const Polynomial& p);

/// Antiderivative with zero constant term.
[[nodiscard]] Polynomial antiderivative(const Polynomial& p);

/// x^k * p(x).
[[nodiscard]] Polynomial shift_degree(const Polynomial& p, std::size_t k);

/// Exact definite integral over [a, b]. Throws std::invalid_argument if a > b.
[[nodiscard]] Rational integrate(const Polynomial& p, const Rational& a, const Rational& b);

/// The integrals of x^k over [a, b] for k < count, held as integers over one
/// common denominator so that many integrals over the same interval cost one
/// integer dot product each.
class PowerIntegrals {
public:
    /// Throws std::invalid_argument if a > b.
    PowerIntegrals(const Rational& a, const Rational& b, std::size_t count);
    /// int_a^b x^shift p(x) dx; needs degree(p) + shift < count.
    [[nodiscard]] Rational integrate(const Polynomial& p, std::size_t shift = 0) const;
    /// int_a^b x^s p(x) q(x) dx for each s in shifts, without forming p q.
    [[nodiscard]] std::vector<Rational> integrate_product(const Polynomial& p, const Polynomial& q,
                                                          std::initializer_list<std::size_t> shifts) const;

private:
    std::vector<mpz_class> scaled_;  // scaled_[k] = denominator_ * int_a^b x^k dx
    mpz_class denominator_;
};

}  // namespace uncert
