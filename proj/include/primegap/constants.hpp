// The constant-optimization pipeline: the alpha tradeoff behind 4/pi, the
// sin^2 t / t^2 integral behind 1/2 + eps, and the derived interval and
// prime-count constants.

#pragma once

#include <utility>

namespace primegap {

// alpha/pi + 4/(pi alpha): the sqrt(x)-coefficient of the two zero-sum
// bounds combined. Minimized at alpha = 2 with value 4/pi.
double asymptotic_coefficient(double alpha);

// Golden-section minimum of asymptotic_coefficient over (0.01, 100) by
// default, or over a caller-supplied bracket.
std::pair<double, double> minimize_asymptotic(double lo = 0.01, double hi = 100.0);

struct Sinc2Integral {
    double value = 0;
    double error_estimate = 0;
};

// int_0^a sin^2 t / t^2 dt. The removable singularity at 0 is handled by the
// series 1 - t^2/3 + 2t^4/45 - t^6/315 on [0, 1e-3]; the rest is adaptive
// Gauss-Kronrod at 1e-12 target. Increasing in a with limit pi/2.
Sinc2Integral sinc2_integral(double a);

// 2/(pi alpha) + (1/pi) int_0^{alpha/2} sin^2 t/t^2 dt; decreasing, -> 1/2.
double c_alpha(double alpha);

// Full-width interval constant 2 c(alpha) -> 1, and the prime-count constant
// 2 (1 + c(alpha)) -> 3.
double theorem2_constant(double alpha);
double cramer_constant(double alpha);

// Smallest alpha with c_alpha(alpha) <= 1/2 + eps (bisection; c_alpha is
// monotone). eps > 0.
double alpha_for_epsilon(double eps);

struct ConstantReport {
    double alpha = 0;
    double integral_value = 0;
    double quadrature_error_estimate = 0;
    double c_alpha = 0;
    double theorem2_constant = 0;
    double cramer_constant = 0;
};

ConstantReport constant_report(double alpha);

}  // namespace primegap
