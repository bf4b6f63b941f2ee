// Truncated explicit formulas for psi and psi1, the triangular-weight
// identity, and the Sigma = Sigma_1 + Sigma_2 machinery with its explicit
// bounds.
//
// Every truncated zero sum is an interval statement: the evaluation carries a
// rigorous bound on the omitted zero contribution next to the computed value.
// Zero sums run in ascending ordinate order through the fixed-chunk
// compensated reduction, so results are identical for any thread count.

#pragma once

#include <cstdint>
#include <optional>

#include "primegap/sieve.hpp"
#include "primegap/zeros.hpp"

namespace primegap {

struct ExplicitEval {
    double x = 0;  // evaluation point actually used (after any half-shift)
    std::optional<double> h;
    std::size_t zeros_used = 0;
    double main_term = 0;
    double zero_sum = 0;     // paired real form, ascending-ordinate reduction
    double small_terms = 0;
    double value = 0;        // main_term - zero_sum + small_terms
    double truncation_tail_bound = 0;
};

// Eq.-(4)-style evaluation: psi(x) ~ x - sum_rho x^rho/rho - log 2pi
// - (1/2) log(1 - x^-2), truncated to the first K table zeros (paired).
// The formula requires non-integral x; integral inputs are evaluated at
// x + 1/2 and the shifted x is recorded in the result.
//
// The attached tail bound uses Schoenfeld's RH estimate
// |psi(x) - x| < sqrt(x) log^2 x / (8 pi) (x >= 73.2; a sieve-verified
// constant covers smaller x) to bound the full zero sum, since sum x^rho/rho
// is only conditionally convergent and has no absolute gamma^-2 tail.
ExplicitEval psi_explicit(double x, const ZeroTable& table, std::size_t K,
                          unsigned threads = 1);

// Smoothed form: psi1(x) ~ x^2/2 - sum_rho x^(rho+1)/(rho(rho+1))
// - x log 2pi, truncated to the first K table zeros. The epsilon(x) defect of
// the identity is deliberately NOT included; residual_epsilon measures it.
// Tail bound: 2 x^(3/2) * (gamma^-2 tail), absolutely convergent.
ExplicitEval psi1_explicit(double x, const ZeroTable& table, std::size_t K,
                           unsigned threads = 1);

struct ResidualInterval {
    double center = 0;      // psi1_sieve(x) - truncated explicit value
    double half_width = 0;  // truncation tail bound
    double lo() const { return center - half_width; }
    double hi() const { return center + half_width; }
};

// Measures the epsilon(x) defect of the psi1 formula against sieve ground
// truth, widened by the truncation tail bound.
ResidualInterval residual_epsilon(double x, const ChebyshevOracle& oracle,
                                  const ZeroTable& table, std::size_t K,
                                  unsigned threads = 1);

// Triangular weight: 1 - |n - x|/h on the open window (x-h, x+h), else 0.
double weight_w(double n, double x, double h);

// Left side of the weight identity: sum over n of Lambda(n) w(n), summed
// exactly over the sieved window.
double weighted_sum_direct(const ChebyshevOracle& oracle, double x, double h);

// Right side: (psi1(x+h) - 2 psi1(x) + psi1(x-h)) / h. The second difference
// cancels x^2/2-sized terms, so the three sums and the difference are
// accumulated in binary128 before rounding once to double.
double weighted_sum_via_psi1(const ChebyshevOracle& oracle, double x, double h);

struct SigmaSplit {
    double alpha = 0;
    double cutoff = 0;  // alpha x / h
    double sigma1 = 0;          // exact over table zeros below the cutoff
    double sigma2_partial = 0;  // exact over table zeros above the cutoff
    double sigma2_tail_bound = 0;  // zeros beyond the table
    std::optional<double> sigma1_bound;  // present when cutoff > 15
    std::optional<double> sigma2_bound;
    double sigma() const { return sigma1 + sigma2_partial; }
};

// The weighted zero sum Sigma = sum_rho ((x+h)^{rho+1} - 2x^{rho+1}
// + (x-h)^{rho+1}) / (rho(rho+1)) split at the ordinate cutoff alpha x / h.
// Requires 0 < h < x and a table covering the cutoff; a cutoff beyond the
// table is rejected unless tail_fallback is set, in which case every zero
// beyond the table (whichever side of the cutoff it falls on) is folded into
// sigma2_tail_bound, keeping the result a valid interval statement.
SigmaSplit sigma_exact(double x, double h, double alpha, const ZeroTable& table,
                       unsigned threads = 1, bool tail_fallback = false);

// |Sigma_1| < alpha x h log(alpha x/h) / (pi sqrt(x-h)), valid when the
// cutoff alpha x / h exceeds 15.
double sigma1_bound(double x, double h, double alpha);

// |Sigma_2| < 4 h (x+h)^{3/2} log(alpha x/h) / (pi alpha x), same validity.
double sigma2_bound(double x, double h, double alpha);

// Fully explicit lower bound for sum over primes p in (x-h, x+h) of log p:
//   h - [alpha x/(pi sqrt(x-h)) + 4(x+h)^{3/2}/(pi alpha x)] log(alpha x/h)
//     - 1.11 sqrt(x+h) - 3 (x+h)^{1/3} + 0.98 sqrt(x-h) - 48/(5h).
// Requires x - h >= 121 (prime-power sandwich validity) and cutoff > 15.
double lower_bound_psi_window(double x, double h, double alpha = 2.0);

// Rigorous upper bound for the gamma^-2 sum over ordinates above T, usable
// for any T > 0: table entries enumerate (T, 15] and the closed bound covers
// the rest.
double zero_tail_sq_upper(const ZeroTable& table, double T);

}  // namespace primegap
