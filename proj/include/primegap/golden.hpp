// Golden-section minimization of a scalar function on a bracket.

#pragma once

#include <cmath>
#include <utility>

namespace primegap {

// Minimizes f over [a, b] to absolute x-tolerance tol. Returns (x*, f(x*)).
// Unimodality is the caller's contract; for a monotone f the result converges
// to the boundary.
template <typename F>
std::pair<double, double> golden_minimize(F&& f, double a, double b, double tol = 1e-9) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

}  // namespace primegap
