#include "uncert/reference.hpp"

namespace uncert {

PiecewisePoly tent() {
    return {{Rational(-1), Rational(0), Rational(1)},
            {Polynomial{Rational(1), Rational(1)}, Polynomial{Rational(1), Rational(-1)}}};
}

PiecewisePoly unit_rect() { return PiecewisePoly::indicator(Rational(-1, 2), Rational(1, 2)); }

PiecewisePoly reference_cubic() {
    const auto q = [](const char* s) { return Rational::parse(s); };
    const Rational d = q("0.3030894498");
    const Polynomial minus{d, q("0.9779994788"), q("1.2275239864"), q("0.5526139574")};
    const Polynomial plus{d, q("1.3050416889"), q("-1.6176420481"), q("0.0095109093")};
    return {{Rational(-1), Rational(0), Rational(1)}, {minus, plus}};
}

}  // namespace uncert
