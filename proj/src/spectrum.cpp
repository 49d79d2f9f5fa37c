#include "uncert/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace uncert {

using cplx = std::complex<double>;
using std::numbers::pi;

namespace {

// P^(m) evaluated at x, for m = 0..deg.
std::vector<Rational> derivative_values(const Polynomial& p, const Rational& x, std::size_t count) {
    std::vector<Rational> out(count);
    Polynomial d = p;
    for (std::size_t m = 0; m < count && !d.is_zero(); ++m) {
        out[m] = d(x);
        d = derivative(d);
    }
    return out;
}

}  // namespace

FourierTransform::FourierTransform(const PiecewisePoly& f) {
    if (f.is_zero()) return;
    const auto& b = f.breakpoints();
    const std::size_t count = static_cast<std::size_t>(std::max<long>(f.degree(), 0)) + 1;
    span_ = (f.hi() - f.lo()).to_double();

    for (std::size_t i = 0; i < f.size(); ++i) {
        const Rational h = (b[i + 1] - b[i]) / Rational(2);
        const Rational c = (b[i + 1] + b[i]) / Rational(2);
        const Polynomial local = compose_affine(f.pieces()[i], h, c);
        Piece piece;
        piece.center = c.to_double();
        piece.half = h.to_double();
        for (const auto& q : local.coeffs()) {
            piece.coeffs.push_back(q.to_double());
            piece.abs_sum += std::abs(piece.coeffs.back());
        }
        for (const auto& v : derivative_values(local, Rational(1), local.coeffs().size())) {
            piece.d_plus.push_back(v.to_double());
        }
        for (const auto& v : derivative_values(local, Rational(-1), local.coeffs().size())) {
            piece.d_minus.push_back(v.to_double());
        }
        pieces_.push_back(std::move(piece));
    }

    for (std::size_t i = 0; i < b.size(); ++i) {
        std::vector<Rational> right(count), left(count);
        if (i < f.size()) right = derivative_values(f.pieces()[i], b[i], count);
        if (i > 0) left = derivative_values(f.pieces()[i - 1], b[i], count);
        Knot k;
        k.x = b[i].to_double();
        for (std::size_t m = 0; m < count; ++m) k.jumps.push_back((right[m] - left[m]).to_double());
        knots_.push_back(std::move(k));
    }
}

// int_{-1}^{1} P(z) e^{-i theta z} dz
cplx FourierTransform::piece_integral(const Piece& p, double theta) {
    const std::size_t n = p.coeffs.size();
    if (n == 0) return {0.0, 0.0};
    if (std::abs(theta) < static_cast<double>(n)) {
        // Taylor in theta: sum_m (-i theta)^m / m! * int z^m P(z) dz.
        cplx sum{0.0, 0.0};
        cplx factor{1.0, 0.0};
        const cplx step{0.0, -theta};
        for (std::size_t m = 0; m < 400; ++m) {
            double mu = 0.0;
            for (std::size_t j = (m % 2); j < n; j += 2) mu += p.coeffs[j] * 2.0 / static_cast<double>(m + j + 1);
            sum += factor * mu;
            const double bound = std::abs(factor) * 2.0 * p.abs_sum;
            if (m > n && bound < 1e-18 * std::abs(sum) + 1e-300) break;
            factor *= step / static_cast<double>(m + 1);
        }
        return sum;
    }
    // Closed form with s = -i theta:
    //   [e^{s z} sum_k (-1)^k P^(k)(z) / s^{k+1}]_{-1}^{1}
    const cplx s{0.0, -theta};
    const cplx ep = std::exp(s);
    const cplx em = std::exp(-s);
    cplx sum{0.0, 0.0};
    cplx inv = 1.0 / s;
    const cplx inv_s = inv;
    double sign = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        sum += sign * inv * (p.d_plus[k] * ep - p.d_minus[k] * em);
        inv *= inv_s;
        sign = -sign;
    }
    return sum;
}

cplx FourierTransform::operator()(double omega) const {
    cplx total{0.0, 0.0};
    for (const auto& p : pieces_) {
        const cplx phase = std::polar(1.0, -omega * p.center);
        total += p.half * phase * piece_integral(p, omega * p.half);
    }
    return total;
}

SpectrumSample fourier_eval(const PiecewisePoly& f, double omega) {
    const cplx v = FourierTransform(f)(omega);
    return {omega, v.real(), v.imag()};
}

namespace {

// J_n(eta) = int_0^1 s^n e^{-i eta s} ds
cplx J_n(int n, double eta) {
    const cplx e = std::polar(1.0, -eta);
    const cplx ie{0.0, eta};
    if (std::abs(eta) > n) {
        cplx j = (1.0 - e) / ie;
        for (int k = 1; k <= n; ++k) j = (static_cast<double>(k) * j - e) / ie;
        return j;
    }
    // Backward (Miller) recurrence; stable for |eta| <= n, and exact at eta = 0
    // up to the truncation at N.
    const int N = n + 60 + static_cast<int>(10.0 * std::sqrt(static_cast<double>(n)) + 2.0 * std::abs(eta));
    cplx j{0.0, 0.0};
    for (int k = N; k > n; --k) j = (ie * j + e) / static_cast<double>(k);
    return j;
}

double sinc(double x) {
    if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

void require_positive(int n, const char* name) {
    if (n < 1) throw std::invalid_argument(std::string(name) + " needs n >= 1, got " + std::to_string(n));
}

}  // namespace

double F_n_eval(int n, double eta) {
    require_positive(n, "F_n_eval");
    return (std::polar(1.0, eta) * J_n(n, eta)).real();
}

double H_n_eval(int n, double eta) {
    require_positive(n, "H_n_eval");
    return sinc(eta) - J_n(n, eta).real();
}

// ---------------------------------------------------------------------------
// Quadrature

namespace {

// 15-point Kronrod nodes (positive half) and weights, with the embedded
// 7-point Gauss weights on the odd-indexed nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467768523486,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelValue {
    double kronrod;
    double gauss;
    double l1;
};

PanelValue gk15(const std::function<double(double)>& fn, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = fn(c);
    double k = fc * kWgk[7];
    double g = fc * kWg[3];
    double l1 = std::abs(fc) * kWgk[7];
    for (std::size_t j = 0; j < 7; ++j) {
        const double f1 = fn(c - h * kXgk[j]);
        const double f2 = fn(c + h * kXgk[j]);
        k += kWgk[j] * (f1 + f2);
        l1 += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) g += kWg[j / 2] * (f1 + f2);
    }
    return {k * h, g * h, l1 * std::abs(h)};
}

}  // namespace

PanelSum gauss_kronrod(const std::function<double(double)>& fn, double a, double b, double max_width) {
    PanelSum out;
    if (!(b > a)) return out;
    const auto panels = static_cast<long>(std::ceil((b - a) / max_width));
    const double w = (b - a) / static_cast<double>(panels);
    for (long i = 0; i < panels; ++i) {
        const double lo = a + w * static_cast<double>(i);
        const double hi = (i + 1 == panels) ? b : lo + w;
        const PanelValue v = gk15(fn, lo, hi);
        out.value += v.kronrod;
        out.error += std::abs(v.kronrod - v.gauss);
        out.l1 += v.l1;
    }
    out.panels = panels;
    return out;
}

namespace {

constexpr long kPanelBudget = 4'000'000;
constexpr double kMaxRadius = 1 << 24;

// Asymptotic model of fhat: fhat(w) = sum_j e^{-i w x_j} sum_m jump_{j,m} / (i w)^{m+1}.
struct JumpProfile {
    int lead = -1;                 // lowest order with a jump above tolerance
    std::vector<double> x;         // knot positions
    std::vector<double> a;         // leading-order jumps
    double lead_mass = 0.0;        // sum |a_j|
    double rest_mass = 0.0;        // sum of |jumps| at orders above lead
    double small_mass = 0.0;       // sub-tolerance jumps below lead
    int small_order = -1;          // lowest order of those
};

JumpProfile profile(const FourierTransform& ft, double jump_tol) {
    JumpProfile p;
    std::size_t orders = 0;
    for (const auto& k : ft.knots()) orders = std::max(orders, k.jumps.size());
    for (std::size_t m = 0; m < orders && p.lead < 0; ++m) {
        for (const auto& k : ft.knots()) {
            if (m < k.jumps.size() && std::abs(k.jumps[m]) > jump_tol) p.lead = static_cast<int>(m);
        }
    }
    if (p.lead < 0) return p;  // zero function
    for (const auto& k : ft.knots()) {
        for (std::size_t m = 0; m < k.jumps.size(); ++m) {
            const double v = std::abs(k.jumps[m]);
            if (static_cast<int>(m) < p.lead) {
                if (v > 0.0) {
                    p.small_mass += v;
                    if (p.small_order < 0 || static_cast<int>(m) < p.small_order) p.small_order = static_cast<int>(m);
                }
            } else if (static_cast<int>(m) > p.lead) {
                p.rest_mass += v;
            }
        }
        const double lead = static_cast<std::size_t>(p.lead) < k.jumps.size() ? k.jumps[p.lead] : 0.0;
        p.x.push_back(k.x);
        p.a.push_back(lead);
        p.lead_mass += std::abs(lead);
    }
    return p;
}

// int_R^inf w^{-q} dw, with a logarithmic stand-in at q <= 1 (used only for
// bounding sub-tolerance residues).
double tail_power(double q, double R) {
    if (q > 1.0) return std::pow(R, 1.0 - q) / (q - 1.0);
    return 1.0 + std::log(R) + (q < 1.0 ? std::pow(R, 1.0 - q) / (1.0 - q) : 0.0);
}

// Tail of (1/pi) int_R^inf w^k Re(fhat conj(ghat)) dw.
struct TailModel {
    double power = 0.0;     // decay exponent of the leading product
    double average = 0.0;   // coefficient of its non-oscillating part
    double oscillating = 0.0;
    double rem1 = 0.0;
    double rem2 = 0.0;
    JumpProfile f, g;
    int k = 0;

    [[nodiscard]] double value(double R) const { return average * tail_power(power, R) / pi; }
    [[nodiscard]] double error(double R) const {
        double e = oscillating * std::pow(R, -power);
        e += rem1 * std::pow(R, -power) / power + rem2 * std::pow(R, -power - 1.0) / (power + 1.0);
        const auto residue = [&](const JumpProfile& s, const JumpProfile& o) {
            if (s.small_order < 0) return 0.0;
            const double q = s.small_order + o.lead + 2 - k;
            return s.small_mass * (o.lead_mass + o.rest_mass) * tail_power(q, R);
        };
        e += residue(f, g) + residue(g, f);
        return e / pi;
    }
};

TailModel tail_model(const FourierTransform& ff, const FourierTransform& gg, int k, double jump_tol) {
    TailModel t;
    t.k = k;
    t.f = profile(ff, jump_tol);
    t.g = profile(gg, jump_tol);
    t.power = t.f.lead + t.g.lead + 2 - k;
    // i^{m_g - m_f}: only its real part survives in Re(fhat conj(ghat)).
    const int d = ((t.g.lead - t.f.lead) % 4 + 4) % 4;
    const double phase_re = d == 0 ? 1.0 : (d == 2 ? -1.0 : 0.0);
    const double phase_abs = 1.0;
    for (std::size_t i = 0; i < t.f.x.size(); ++i) {
        for (std::size_t j = 0; j < t.g.x.size(); ++j) {
            const double prod = t.f.a[i] * t.g.a[j];
            if (prod == 0.0) continue;
            const double gap = std::abs(t.f.x[i] - t.g.x[j]);
            if (gap == 0.0) {
                t.average += prod * phase_re;
            } else {
                // |int_R^inf cos(gap w + phi) w^{-p} dw| <= 2 / (gap R^p)
                t.oscillating += std::abs(prod) * phase_abs * 2.0 / gap;
            }
        }
    }
    t.rem1 = t.f.lead_mass * t.g.rest_mass + t.f.rest_mass * t.g.lead_mass;
    t.rem2 = t.f.rest_mass * t.g.rest_mass;
    return t;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

QuadratureResult quad_freq_product(const PiecewisePoly& f, const PiecewisePoly& g, int k, double rel_tol,
                                   double jump_tol) {
    if (k != 0 && k != 2) throw std::invalid_argument("frequency moment order must be 0 or 2");
    if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be positive");
    if (f.is_zero() || g.is_zero()) return {};

    const FourierTransform ff(f);
    const FourierTransform gg(g);
    const TailModel tail = tail_model(ff, gg, k, jump_tol);
    if (tail.power <= 1.0) {
        throw DivergentIntegral("frequency integral of order " + std::to_string(k) +
                                " diverges: the integrand decays like |w|^-" + fmt(tail.power) +
                                " (the function or its derivative has a jump)");
    }

    // Panels resolve the fastest oscillation e^{-i w (x_j - x_l)}.
    const Rational lo = min(f.lo(), g.lo());
    const Rational hi = max(f.hi(), g.hi());
    const double span = std::max((hi - lo).to_double(), 1e-300);
    double width = std::min(1.0, pi / (2.0 * span));

    const auto integrand = [&](double w) {
        const cplx a = ff(w);
        const cplx b = gg(w);
        const double re = a.real() * b.real() + a.imag() * b.imag();
        return k == 0 ? re : w * w * re;
    };

    for (int refine = 0; refine < 8; ++refine, width /= 2.0) {
        double R = 8.0;
        PanelSum acc = gauss_kronrod(integrand, 0.0, R, width);
        double value = 0.0;
        double scale = 0.0;
        bool over_budget = false;
        for (;;) {
            value = acc.value / pi + tail.value(R);
            scale = std::max(std::abs(value), 1e-3 * acc.l1 / pi);
            if (tail.error(R) <= 0.25 * rel_tol * scale) break;
            if (2.0 * R > kMaxRadius || acc.panels > kPanelBudget) {
                over_budget = true;
                break;
            }
            const PanelSum more = gauss_kronrod(integrand, R, 2.0 * R, width);
            acc.value += more.value;
            acc.error += more.error;
            acc.l1 += more.l1;
            acc.panels += more.panels;
            R *= 2.0;
        }
        if (over_budget) {
            throw NonConvergence("tail bound " + fmt(tail.error(R)) + " not below " + fmt(0.25 * rel_tol * scale) +
                                 " at radius " + fmt(R));
        }
        if (acc.error / pi <= 0.25 * rel_tol * scale) {
            return {value, acc.error / pi + tail.error(R), R};
        }
    }
    throw NonConvergence("panel error estimate did not meet rel_tol " + fmt(rel_tol) + " after refinement");
}

QuadratureResult quad_freq_moment(const PiecewisePoly& f, int k, double rel_tol, double jump_tol) {
    if (f.is_zero()) throw std::invalid_argument("quad_freq_moment of the zero function");
    return quad_freq_product(f, f, k, rel_tol, jump_tol);
}

QuadratureResult integrate_F_n_squared(int n, double rel_tol) {
    require_positive(n, "integrate_F_n_squared");
    // |F_n(eta)| <= (n + 1) / eta^2 for eta >= 1, so the two tails together
    // are at most 2 (n + 1)^2 / (3 R^3).
    const double c = static_cast<double>(n + 1);
    const auto fn = [n](double eta) {
        const double v = F_n_eval(n, eta);
        return v * v;
    };
    double R = 16.0;
    PanelSum acc = gauss_kronrod(fn, 0.0, R, 0.5);
    while (2.0 * c * c / (3.0 * R * R * R) > 0.25 * rel_tol * 2.0 * acc.value) {
        const PanelSum more = gauss_kronrod(fn, R, 2.0 * R, 0.5);
        acc.value += more.value;
        acc.error += more.error;
        R *= 2.0;
        if (R > kMaxRadius) throw NonConvergence("F_n squared tail did not converge");
    }
    return {2.0 * acc.value, 2.0 * acc.error + 2.0 * c * c / (3.0 * R * R * R), R};
}

QuadratureResult atom_frequency_mean(const PiecewisePoly& envelope, const AtomParams& gamma, double rel_tol) {
    if (envelope.is_zero()) throw std::invalid_argument("atom_frequency_mean of the zero envelope");
    if (gamma.t.sign() <= 0) throw std::invalid_argument("atom scale t must be positive");
    const FourierTransform ft(envelope);
    const JumpProfile prof = profile(ft, 0.0);
    if (prof.lead < 1) {
        throw DivergentIntegral("frequency mean needs a continuous envelope with zero boundary values");
    }

    const double t = gamma.t.to_double();
    const double center = 2.0 * pi * gamma.xi.to_double();
    // |Ghat(w)|^2 = t^2 |ghat(t (w - 2 pi xi))|^2, and |ghat(nu)| <= C / nu^q for
    // nu >= 1 with q one more than the lowest jump order.
    const auto density = [&](double w) { return t * t * std::norm(ft(t * (w - center))); };
    const auto first = [&](double w) { return w * density(w); };

    const double C = prof.lead_mass + prof.rest_mass;
    const double q2 = 2.0 * (prof.lead + 1);
    const double mass = 2.0 * pi * t * norm_sq(envelope).to_double();
    // Tails beyond nu = R in envelope frequency, per side:
    //   |first moment| <= t C^2 (|center| R^(1-2q) / (2q-1) + R^(2-2q) / (t (2q-2))).
    double R = 64.0;
    const auto tail_err = [&](double r) {
        return 2.0 * t * C * C *
               (std::abs(center) * std::pow(r, 1.0 - q2) / (q2 - 1.0) + std::pow(r, 2.0 - q2) / (t * (q2 - 2.0))) /
               mass;
    };
    while (tail_err(R) > 0.25 * rel_tol * std::max(std::abs(center), 1.0)) {
        R *= 2.0;
        if (R > kMaxRadius) throw NonConvergence("atom frequency mean tail did not converge");
    }
    const double W = std::abs(center) + R / t;
    const double width = std::min(1.0, pi / (2.0 * t * std::max(ft.span(), 1e-300)));
    const PanelSum num = gauss_kronrod(first, -W, W, width);
    const PanelSum den = gauss_kronrod(density, -W, W, width);
    const double beta = num.value / den.value;
    const double err = (num.error + std::abs(beta) * den.error) / den.value + tail_err(R);
    return {beta, err, W};
}

}  // namespace uncert
