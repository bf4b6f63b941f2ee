#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "primegap/constants.hpp"
#include "primegap/quadrature.hpp"

using namespace primegap;

namespace {

constexpr double kPi = std::numbers::pi;

double sinc2(double t) {
    if (t == 0) return 1.0;
    const double s = std::sin(t) / t;
    return s * s;
}

// Independent oracle: composite Simpson with Richardson refinement, plus the
// same series patch order near zero (different code path, different panels).
double sinc2_simpson(double a, int n) {
    const double s = std::min(a, 1e-3);
    double head = s - s * s * s / 9.0;
    if (a <= s) return head;
    const double w = (a - s) / n;
    double acc = sinc2(s) + sinc2(a);
    for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * sinc2(s + i * w);
    return head + acc * w / 3.0;
}

}  // namespace

TEST_CASE("asymptotic coefficient values and symmetry") {
    CHECK(asymptotic_coefficient(2.0) == doctest::Approx(4.0 / kPi).epsilon(1e-15));
    CHECK(asymptotic_coefficient(1.0) == doctest::Approx(5.0 / kPi).epsilon(1e-15));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(0.05, 40.0);
    for (int i = 0; i < 100; ++i) {
        const double a = d(rng);
        CHECK(asymptotic_coefficient(a) ==
              doctest::Approx(asymptotic_coefficient(4.0 / a)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(asymptotic_coefficient(0.0), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_coefficient(-2.0), std::invalid_argument);
}

TEST_CASE("minimizer lands on alpha = 2 with value 4/pi") {
    const auto [astar, value] = minimize_asymptotic();
    CHECK(std::abs(astar - 2.0) < 1e-6);
    CHECK(std::abs(value - 4.0 / kPi) < 1e-9);
    CHECK(value == doctest::Approx(asymptotic_coefficient(astar)).epsilon(1e-12));

    // Monotone beyond the minimizer: a restricted bracket pins the boundary.
    const auto [b_astar, b_value] = minimize_asymptotic(3.0, 10.0);
    CHECK(std::abs(b_astar - 3.0) < 1e-5);
    CHECK(b_value == doctest::Approx(asymptotic_coefficient(b_astar)));
}

TEST_CASE("sinc^2 integral: frozen values") {
    CHECK(sinc2_integral(0.0).value == 0.0);
    // mpmath: Si(2a) - sin(a)^2/a
    CHECK(sinc2_integral(0.5).value == doctest::Approx(0.48638537623532273).epsilon(1e-10));
    CHECK(sinc2_integral(1.0).value == doctest::Approx(0.89733955852912366).epsilon(1e-10));
    CHECK(sinc2_integral(2.0).value == doctest::Approx(1.34479223373315008).epsilon(1e-10));
    CHECK(sinc2_integral(50.0).value == doctest::Approx(1.56084865561193313).epsilon(1e-10));
    CHECK(sinc2_integral(1.0).error_estimate < 1e-10);
    CHECK_THROWS_AS(sinc2_integral(-1.0), std::invalid_argument);
}

TEST_CASE("sinc^2 integral against an independent Simpson oracle") {
    for (double a : {0.7, 3.3, 17.0}) {
        const double coarse = sinc2_simpson(a, 2000);
        const double fine = sinc2_simpson(a, 4000);
        const double richardson = fine + (fine - coarse) / 15.0;
        CHECK(sinc2_integral(a).value == doctest::Approx(richardson).epsilon(1e-9));
    }
}

TEST_CASE("sinc^2 integral: monotone, bounded by pi/2, tail-corrected limit") {
    double last = -1;
    for (double a : {0.5, 1.0, 4.0, 16.0, 64.0, 256.0}) {
        const double v = sinc2_integral(a).value;
        CHECK(v > last);
        CHECK(v < kPi / 2);
        CHECK(v + 1.0 / a > kPi / 2);  // tail <= 1/a since sin^2 <= 1
        last = v;
    }
    // At a = 1e4 the deficit is the tail integral, 1/(2a) up to O(a^-2).
    const double deficit = kPi / 2 - sinc2_integral(1e4).value;
    CHECK(deficit > 4.9e-5);
    CHECK(deficit < 5.1e-5);
}

TEST_CASE("error estimate bounds the next refinement step") {
    for (double a : {3.0, 29.5, 410.0}) {
        const auto rough = integrate_adaptive([](double t) { return sinc2(t); }, 1e-3, a,
                                              1e-8, 0.0, 400000, 8.0);
        const auto sharp = integrate_adaptive([](double t) { return sinc2(t); }, 1e-3, a,
                                              1e-13, 0.0, 400000, 8.0);
        CHECK(std::abs(rough.value - sharp.value) <= rough.error_estimate + 1e-13);
    }
}

TEST_CASE("c(alpha): frozen value, divergence, monotone decrease") {
    CHECK(c_alpha(100.0) == doctest::Approx(0.50319975564163293).epsilon(1e-10));
    // Small alpha: dominated by 2/(pi alpha).
    const double a0 = 1e-4;
    CHECK(std::abs(c_alpha(a0) - 2.0 / (kPi * a0)) < 1.0);
    // Strictly decreasing on the grid (derivative is -2 cos^2(a/2)/(pi a^2)).
    double last = 1e300;
    for (double a = 4.0; a <= 40.0; a += 1.0) {
        const double c = c_alpha(a);
        CHECK(c < last);
        last = c;
    }
    CHECK_THROWS_AS(c_alpha(0.0), std::invalid_argument);
}

TEST_CASE("derived constants approach 1 and 3 from above") {
    CHECK(theorem2_constant(1000.0) == doctest::Approx(1.00063609408370).epsilon(1e-10));
    CHECK(cramer_constant(1000.0) == doctest::Approx(3.00063609408370).epsilon(1e-10));

    double last_c = 1e300, last_t = 1e300, last_cr = 1e300;
    for (double a : {10.0, 100.0, 1000.0, 10000.0}) {
        const double c = c_alpha(a), t = theorem2_constant(a), cr = cramer_constant(a);
        CHECK(c > 0.5);       // strictly above the limit for every finite alpha
        CHECK(t > 1.0);
        CHECK(cr > 3.0);
        CHECK(c < last_c);
        CHECK(t < last_t);
        CHECK(cr < last_cr);
        CHECK(cr - t == doctest::Approx(2.0).epsilon(1e-12));
        last_c = c;
        last_t = t;
        last_cr = cr;
    }
}

TEST_CASE("alpha_for_epsilon inverts the monotone curve") {
    for (double eps : {0.05, 0.01, 0.001}) {
        const double a = alpha_for_epsilon(eps);
        CHECK(c_alpha(a) <= 0.5 + eps);
        CHECK(c_alpha(a * 0.8) > 0.5 + eps);
        CHECK(a > 1.0 / (kPi * eps) * 0.5);
    }
    CHECK_THROWS_AS(alpha_for_epsilon(0.0), std::invalid_argument);
}

TEST_CASE("constant report invariants") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> d(0.5, 500.0);
    for (int i = 0; i < 25; ++i) {
        const auto r = constant_report(d(rng));
        CHECK(r.integral_value > 0);
        CHECK(r.integral_value < kPi / 2);
        CHECK(r.c_alpha > 0.5);
        CHECK(r.theorem2_constant == doctest::Approx(2.0 * r.c_alpha).epsilon(1e-14));
        CHECK(r.cramer_constant == doctest::Approx(2.0 * (1.0 + r.c_alpha)).epsilon(1e-14));
        CHECK(r.quadrature_error_estimate >= 0);
        CHECK(r.quadrature_error_estimate < 1e-8);
    }
}
