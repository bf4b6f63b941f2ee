// Finite-range verification of interval-prime claims, normalized-gap
// statistics, the prime-power sandwich, and interval prime-count checks.
//
// The central claim "every real x in [2, x_max] has a prime in
// (x - c sqrt(x) log x, x]" is reduced to one check per consecutive prime
// pair: on [p, q) the best available prime is p and x - c sqrt(x) log x is
// increasing (verified, not assumed), so the worst x is the right endpoint.
// Rounding is one-sided: the computed left side is nudged up 4 ulps before
// the comparison, so floating error can only produce spurious failures,
// never a spurious pass. Below a c-dependent switch point where
// monotonicity can fail, a direct dense scan with a Lipschitz margin is
// used instead.

#pragma once

#include <cstdint>
#include <vector>

#include "primegap/sieve.hpp"

namespace primegap {

struct GapCertificate {
    std::uint64_t p_lo = 0;  // prime
    std::uint64_t p_hi = 0;  // next prime
    std::uint64_t gap = 0;
    double normalized = 0;   // gap / (sqrt(p_hi) log p_hi)
    bool passes_4_over_pi = false;
    bool passes_8_over_5 = false;
};

struct GapScanResult {
    std::vector<GapCertificate> failures;  // empty = claim verified
    std::uint64_t pairs_checked = 0;
    double dense_scan_end = 0;  // [2, here) was covered by the dense scan
    bool pass() const { return failures.empty(); }
};

// Verifies the interval claim for constant c over real x in [2, x_max].
// Requires an oracle covering x_max. c > 0, x_max >= 2.
GapScanResult verify_interval_claim(const ChebyshevOracle& oracle, double c,
                                    std::uint64_t x_max);

struct MaxNormalizedGap {
    GapCertificate certificate;
    double d_max = 0;
};

// Maximizes (q - p) / (sqrt(q) log q) over consecutive prime pairs with
// q <= x_max. Requires x_max >= 3.
MaxNormalizedGap max_normalized_gap(const ChebyshevOracle& oracle, std::uint64_t x_max);

struct CramerCheck {
    std::uint64_t count = 0;  // pi(x + c sqrt(x) log x) - pi(x)
    double threshold = 0;     // sqrt(x)
    bool pass = false;        // count > threshold
};

CramerCheck cramer_count_check(const ChebyshevOracle& oracle, double x, double c);

struct CramerScanResult {
    bool all_pass = true;
    std::uint64_t checked = 0;
    std::uint64_t worst_x = 0;      // x minimizing count - sqrt(x)
    double worst_margin = 0;
    std::uint64_t failures = 0;
};

// cramer_count_check for every integer x in [x_lo, x_hi], incremental.
CramerScanResult cramer_scan(const ChebyshevOracle& oracle, std::uint64_t x_lo,
                             std::uint64_t x_hi, double c);

struct SchoenfeldCheck {
    bool lower_ok = false;  // 0.98 sqrt(x) < psi(x) - theta(x)
    bool upper_ok = false;  // psi(x) - theta(x) < 1.11 sqrt(x) + 3 x^(1/3)
    double diff = 0;        // psi(x) - theta(x)
    double lower = 0;
    double upper = 0;
};

// Requires x >= 121 (stated validity) and sieve coverage.
SchoenfeldCheck schoenfeld_check(const ChebyshevOracle& oracle, double x);

struct SchoenfeldScanResult {
    bool all_lower_ok = true;
    bool all_upper_ok = true;
    std::uint64_t checked = 0;
    std::uint64_t worst_lower_x = 0;  // smallest diff - 0.98 sqrt(x)
    double worst_lower_margin = 0;
    std::uint64_t worst_upper_x = 0;  // smallest upper - diff
    double worst_upper_margin = 0;
};

// Sandwich check for every integer x in [x_lo, x_hi], incremental.
SchoenfeldScanResult schoenfeld_scan(const ChebyshevOracle& oracle,
                                     std::uint64_t x_lo, std::uint64_t x_hi);

}  // namespace primegap
