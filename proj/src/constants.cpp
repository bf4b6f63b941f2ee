#include "primegap/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "primegap/golden.hpp"
#include "primegap/quadrature.hpp"

namespace primegap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesCut = 1e-3;

double sinc2(double t) {
    const double s = std::sin(t) / t;
    return s * s;
}

// int_0^s of the series 1 - t^2/3 + 2t^4/45 - t^6/315; next term is
// O(s^9 / 6e3), far below double noise at s <= 1e-3.
double series_head(double s) {
    const double s2 = s * s;
    return s * (1.0 + s2 * (-1.0 / 9.0 + s2 * (2.0 / 225.0 - s2 / 2205.0)));
}

}  // namespace

double asymptotic_coefficient(double alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("asymptotic_coefficient: alpha must be positive");
    return alpha / kPi + 4.0 / (kPi * alpha);
}

std::pair<double, double> minimize_asymptotic(double lo, double hi) {
    if (!(lo > 0) || !(hi > lo)) throw std::invalid_argument("minimize_asymptotic: bad bracket");
    return golden_minimize([](double a) { return asymptotic_coefficient(a); }, lo, hi, 1e-8);
}

Sinc2Integral sinc2_integral(double a) {
    if (a < 0) throw std::invalid_argument("sinc2_integral: a must be >= 0");
    Sinc2Integral out;
    if (a == 0) return out;

    const double s = std::min(a, kSeriesCut);
    out.value = series_head(s);
    if (a > s) {
        // Panels start at oscillation scale so the heap refines locally.
        const auto q = integrate_adaptive([](double t) { return sinc2(t); }, s, a,
                                          1e-12, 0.0, 400000, 8.0);
        out.value += q.value;
        out.error_estimate = q.error_estimate;
    }
    return out;
}

double c_alpha(double alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("c_alpha: alpha must be positive");
    return 2.0 / (kPi * alpha) + sinc2_integral(alpha / 2).value / kPi;
}

double theorem2_constant(double alpha) { return 2.0 * c_alpha(alpha); }

double cramer_constant(double alpha) { return 2.0 * (1.0 + c_alpha(alpha)); }

double alpha_for_epsilon(double eps) {
    if (!(eps > 0)) throw std::invalid_argument("alpha_for_epsilon: eps must be positive");
    // c(alpha) - 1/2 lies between 1/(pi alpha) and 2/(pi alpha).
    double lo = 1.0 / (kPi * eps) * 0.5;
    double hi = 2.0 / (kPi * eps) + 10.0;
    while (c_alpha(lo) <= 0.5 + eps) lo *= 0.5;  // keep lo on the > side
    for (int i = 0; i < 200 && hi - lo > 1e-9 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (c_alpha(mid) > 0.5 + eps ? lo : hi) = mid;
    }
    return hi;
}

ConstantReport constant_report(double alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("constant_report: alpha must be positive");
    ConstantReport r;
    r.alpha = alpha;
    const auto integral = sinc2_integral(alpha / 2);
    r.integral_value = integral.value;
    r.quadrature_error_estimate = integral.error_estimate;
    r.c_alpha = 2.0 / (kPi * alpha) + integral.value / kPi;
    r.theorem2_constant = 2.0 * r.c_alpha;
    r.cramer_constant = 2.0 * (1.0 + r.c_alpha);
    return r;
}

}  // namespace primegap
