#include "uncert/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace uncert {

namespace {

// Common denominator of the coefficients, plus the integer numerators over it.
struct IntegerForm {
    mpz_class denominator{1};
    std::vector<mpz_class> numerators;
};

IntegerForm to_integer_form(const std::vector<Rational>& coeffs) {
    IntegerForm out;
    for (const auto& c : coeffs) {
        mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    out.numerators.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        out.numerators.push_back(c.raw().get_num() * (out.denominator / c.raw().get_den()));
    }
    return out;
}

}  // namespace

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { canonicalize(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

Polynomial Polynomial::monomial(std::size_t n, const Rational& c) {
    std::vector<Rational> v(n + 1);
    v[n] = c;
    return Polynomial(std::move(v));
}

void Polynomial::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::operator()(const Rational& x) const {
    if (coeffs_.empty()) return {};
    // Horner on integers: with x = n/d and degree m,
    //   P(x) = (sum_k N_k n^k d^(m-k)) / (D d^m).
    const IntegerForm form = to_integer_form(coeffs_);
    const mpz_class& n = x.raw().get_num();
    const mpz_class& d = x.raw().get_den();
    mpz_class acc = form.numerators.back();
    mpz_class dpow = 1;
    for (std::size_t k = form.numerators.size() - 1; k-- > 0;) {
        dpow *= d;
        acc *= n;
        mpz_addmul(acc.get_mpz_t(), form.numerators[k].get_mpz_t(), dpow.get_mpz_t());
    }
    return Rational(mpq_class(acc, form.denominator * dpow));
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    canonicalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    canonicalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

// Convolution over a common denominator so the inner loop is pure integer
// multiply-accumulate.
Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const IntegerForm ia = to_integer_form(a.coeffs_);
    const IntegerForm ib = to_integer_form(b.coeffs_);
    std::vector<mpz_class> acc(ia.numerators.size() + ib.numerators.size() - 1);
    for (std::size_t i = 0; i < ia.numerators.size(); ++i) {
        if (sgn(ia.numerators[i]) == 0) continue;
        for (std::size_t j = 0; j < ib.numerators.size(); ++j) {
            mpz_addmul(acc[i + j].get_mpz_t(), ia.numerators[i].get_mpz_t(), ib.numerators[j].get_mpz_t());
        }
    }
    const mpz_class den = ia.denominator * ib.denominator;
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (auto& n : acc) out.emplace_back(mpq_class(n, den));
    return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (i == 0 || !unit) os << mag.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Polynomial compose_affine(const Polynomial& p, const Rational& s, const Rational& r) {
    if (p.is_zero()) return {};
    // s x + r = (u x + v) / w with integers u, v, w; then
    //   p(s x + r) = (1 / (D w^m)) sum_k N_k w^(m-k) (u x + v)^k,
    // evaluated by Horner on integer coefficient vectors.
    const IntegerForm form = to_integer_form(p.coeffs());
    const mpz_class u = s.raw().get_num() * r.raw().get_den();
    const mpz_class v = r.raw().get_num() * s.raw().get_den();
    const mpz_class w = s.raw().get_den() * r.raw().get_den();
    const std::size_t m = form.numerators.size() - 1;

    std::vector<mpz_class> acc{form.numerators[m]};
    mpz_class wpow = 1;
    for (std::size_t k = m; k-- > 0;) {
        wpow *= w;
        std::vector<mpz_class> next(acc.size() + 1);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            mpz_addmul(next[i].get_mpz_t(), acc[i].get_mpz_t(), v.get_mpz_t());
            mpz_addmul(next[i + 1].get_mpz_t(), acc[i].get_mpz_t(), u.get_mpz_t());
        }
        mpz_addmul(next[0].get_mpz_t(), form.numerators[k].get_mpz_t(), wpow.get_mpz_t());
        acc = std::move(next);
    }
    const mpz_class den = form.denominator * wpow;
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (auto& c : acc) out.emplace_back(mpq_class(c, den));
    return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Rational> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial antiderivative(const Polynomial& p) {
    const auto& c = p.coeffs();
    if (c.empty()) return {};
    std::vector<Rational> a(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) a[i + 1] = c[i] / Rational(static_cast<long>(i + 1));
    return Polynomial(std::move(a));
}

Polynomial shift_degree(const Polynomial& p, std::size_t k) {
    if (p.is_zero() || k == 0) return p;
    std::vector<Rational> v(k);
    v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
    return Polynomial(std::move(v));
}

Rational integrate(const Polynomial& p, const Rational& a, const Rational& b) {
    if (a > b) throw std::invalid_argument("integrate: lower limit exceeds upper limit");
    if (p.is_zero()) return {};
    return PowerIntegrals(a, b, p.coeffs().size()).integrate(p);
}

PowerIntegrals::PowerIntegrals(const Rational& a, const Rational& b, std::size_t count) {
    if (a > b) throw std::invalid_argument("integrate: lower limit exceeds upper limit");
    // With a = an/ad, b = bn/bd and n = count, scale by lcm(1..n) (ad bd)^n:
    //   scaled_k = lcm/(k+1) (bn^(k+1) bd^(n-k-1) ad^n - an^(k+1) ad^(n-k-1) bd^n)
    const mpz_class& an = a.raw().get_num();
    const mpz_class& ad = a.raw().get_den();
    const mpz_class& bn = b.raw().get_num();
    const mpz_class& bd = b.raw().get_den();
    mpz_class l = 1;
    for (unsigned long k = 2; k <= count; ++k) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), k);

    std::vector<mpz_class> pow_an(count + 1), pow_ad(count + 1), pow_bn(count + 1), pow_bd(count + 1);
    pow_an[0] = pow_ad[0] = pow_bn[0] = pow_bd[0] = 1;
    for (std::size_t k = 1; k <= count; ++k) {
        pow_an[k] = pow_an[k - 1] * an;
        pow_ad[k] = pow_ad[k - 1] * ad;
        pow_bn[k] = pow_bn[k - 1] * bn;
        pow_bd[k] = pow_bd[k - 1] * bd;
    }
    scaled_.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
        const mpz_class diff = pow_bn[k + 1] * pow_bd[count - k - 1] * pow_ad[count] -
                               pow_an[k + 1] * pow_ad[count - k - 1] * pow_bd[count];
        scaled_[k] = diff * (l / static_cast<unsigned long>(k + 1));
    }
    denominator_ = l * pow_ad[count] * pow_bd[count];
}

Rational PowerIntegrals::integrate(const Polynomial& p, std::size_t shift) const {
    if (p.is_zero()) return {};
    if (p.coeffs().size() + shift > scaled_.size()) {
        throw std::invalid_argument("PowerIntegrals: polynomial degree exceeds the precomputed range");
    }
    const IntegerForm form = to_integer_form(p.coeffs());
    mpz_class acc = 0;
    for (std::size_t k = 0; k < form.numerators.size(); ++k) {
        mpz_addmul(acc.get_mpz_t(), form.numerators[k].get_mpz_t(), scaled_[k + shift].get_mpz_t());
    }
    return Rational(mpq_class(acc, denominator_ * form.denominator));
}

std::vector<Rational> PowerIntegrals::integrate_product(const Polynomial& p, const Polynomial& q,
                                                        std::initializer_list<std::size_t> shifts) const {
    std::vector<Rational> out;
    if (p.is_zero() || q.is_zero()) {
        out.resize(shifts.size());
        return out;
    }
    const std::size_t max_shift = shifts.size() ? std::max(shifts) : 0;
    if (p.coeffs().size() + q.coeffs().size() - 1 + max_shift > scaled_.size()) {
        throw std::invalid_argument("PowerIntegrals: polynomial degree exceeds the precomputed range");
    }
    const IntegerForm fp = to_integer_form(p.coeffs());
    const IntegerForm fq = to_integer_form(q.coeffs());
    std::vector<mpz_class> conv(fp.numerators.size() + fq.numerators.size() - 1);
    for (std::size_t i = 0; i < fp.numerators.size(); ++i) {
        if (sgn(fp.numerators[i]) == 0) continue;
        for (std::size_t j = 0; j < fq.numerators.size(); ++j) {
            mpz_addmul(conv[i + j].get_mpz_t(), fp.numerators[i].get_mpz_t(), fq.numerators[j].get_mpz_t());
        }
    }
    const mpz_class den = denominator_ * fp.denominator * fq.denominator;
    for (const std::size_t s : shifts) {
        mpz_class acc = 0;
        for (std::size_t k = 0; k < conv.size(); ++k) {
            mpz_addmul(acc.get_mpz_t(), conv[k].get_mpz_t(), scaled_[k + s].get_mpz_t());
        }
        out.emplace_back(mpq_class(acc, den));
    }
    return out;
}

}  // namespace uncert
