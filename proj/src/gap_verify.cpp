#include "primegap/gap_verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>

#include "primegap/summation.hpp"

namespace primegap {

namespace {

constexpr double k4OverPi = 4.0 / std::numbers::pi;
constexpr double k8Over5 = 1.6;

double interval_left_end(double x, double c) { return x - c * std::sqrt(x) * std::log(x); }

// d/dx [c sqrt(x) log x] = c (log x + 2) / (2 sqrt(x)); strictly decreasing
// for x > 1, so g(x) = x - c sqrt(x) log x is increasing from the first x
// where this drops below 1.
double weight_slope(double x, double c) { return c * (std::log(x) + 2.0) / (2.0 * std::sqrt(x)); }

// Smallest x >= 2 from which g is guaranteed increasing for this c.
double monotone_from(double c) {
    if (weight_slope(2.0, c) < 1.0) return 2.0;
    double lo = 2.0, hi = 4.0;
    while (weight_slope(hi, c) >= 1.0) {
        hi *= 2;
        if (hi > 1e15) throw std::invalid_argument("verify_interval_claim: c too large");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (weight_slope(mid, c) >= 1.0 ? lo : hi) = mid;
    }
    return hi;
}

// One-sided nudge: raise the computed g so rounding can only flag extra
// failures, never hide one.
double round_up_4ulp(double g, double scale) {
    return g + 4.0 * scale * std::numeric_limits<double>::epsilon();
}

// q = 0 marks a next prime beyond the sieve; only p_lo is meaningful then.
GapCertificate make_certificate(std::uint64_t p, std::uint64_t q) {
    GapCertificate cert;
    cert.p_lo = p;
    cert.p_hi = q;
    if (q == 0) return cert;
    cert.gap = q - p;
    const double qd = static_cast<double>(q);
    cert.normalized = static_cast<double>(cert.gap) / (std::sqrt(qd) * std::log(qd));
    const double pd = static_cast<double>(p);
    cert.passes_4_over_pi = round_up_4ulp(interval_left_end(qd, k4OverPi), qd) < pd;
    cert.passes_8_over_5 = round_up_4ulp(interval_left_end(qd, k8Over5), qd) < pd;
    return cert;
}

std::uint64_t next_prime_or_zero(const ChebyshevOracle& oracle, std::uint64_t p) {
    auto q = oracle.window().next_prime_in_window(static_cast<double>(p));
    return q ? *q : 0;
}

}  // namespace

GapScanResult verify_interval_claim(const ChebyshevOracle& oracle, double c,
                                    std::uint64_t x_max) {
    if (!(c > 0)) throw std::invalid_argument("verify_interval_claim: c must be positive");
    if (x_max < 2) throw std::invalid_argument("verify_interval_claim: x_max must be >= 2");
    if (static_cast<double>(x_max) > static_cast<double>(oracle.coverage()))
        throw std::out_of_range("verify_interval_claim: x_max beyond sieve coverage");

    GapScanResult res;
    const double switch_x = std::max(8.0, std::ceil(monotone_from(c)) + 1.0);
    if (switch_x > 1e7)
        throw std::length_error("verify_interval_claim: dense-scan region exceeds budget");
    res.dense_scan_end = std::min(switch_x, static_cast<double>(x_max));

    // Dense scan on [2, dense_scan_end]: grid step + Lipschitz margin so a
    // failure between grid points cannot slip through.
    const double step = 1.0 / 256.0;
    const double lipschitz = 1.0 + weight_slope(2.0, c);
    const double margin = lipschitz * step;
    std::set<std::uint64_t> failed_pairs;  // one certificate per pair
    for (double x = 2.0; x <= res.dense_scan_end; x += step) {
        const std::uint64_t p = oracle.prev_prime(x);
        if (round_up_4ulp(interval_left_end(x, c), x) + margin >= static_cast<double>(p)) {
            if (failed_pairs.insert(p).second)
                res.failures.push_back(make_certificate(p, next_prime_or_zero(oracle, p)));
        }
    }

    if (static_cast<double>(x_max) <= res.dense_scan_end) return res;

    // Pair reduction for x in [dense_scan_end, x_max]. On [p, q) the worst x
    // is min(q, x_max); increasing-ness of g is re-checked per pair.
    const auto& primes = oracle.primes();
    auto it = std::upper_bound(primes.begin(), primes.end(),
                               static_cast<std::uint64_t>(res.dense_scan_end));
    std::size_t i = (it == primes.begin()) ? 0 : static_cast<std::size_t>(it - primes.begin()) - 1;
    for (; i < primes.size() && primes[i] <= x_max; ++i) {
        const std::uint64_t p = primes[i];
        const double xe = (i + 1 < primes.size() && primes[i + 1] <= x_max)
                              ? static_cast<double>(primes[i + 1])
                              : static_cast<double>(x_max);
        const double from = std::max(static_cast<double>(p), res.dense_scan_end);
        if (weight_slope(from, c) >= 1.0)
            throw std::logic_error("verify_interval_claim: monotonicity assumption violated");
        ++res.pairs_checked;
        if (round_up_4ulp(interval_left_end(xe, c), xe) >= static_cast<double>(p)) {
            if (failed_pairs.insert(p).second) {
                const std::uint64_t q = (i + 1 < primes.size())
                                            ? primes[i + 1]
                                            : next_prime_or_zero(oracle, p);
                res.failures.push_back(make_certificate(p, q));
            }
        }
    }
    return res;
}

MaxNormalizedGap max_normalized_gap(const ChebyshevOracle& oracle, std::uint64_t x_max) {
    if (x_max < 3) throw std::invalid_argument("max_normalized_gap: x_max must be >= 3");
    if (static_cast<double>(x_max) > static_cast<double>(oracle.coverage()))
        throw std::out_of_range("max_normalized_gap: x_max beyond sieve coverage");

    const auto& primes = oracle.primes();
    MaxNormalizedGap best;
    best.d_max = -1;
    for (std::size_t i = 0; i + 1 < primes.size() && primes[i + 1] <= x_max; ++i) {
        const double q = static_cast<double>(primes[i + 1]);
        const double norm =
            static_cast<double>(primes[i + 1] - primes[i]) / (std::sqrt(q) * std::log(q));
        if (norm > best.d_max) {
            best.certificate = make_certificate(primes[i], primes[i + 1]);
            best.d_max = norm;
        }
    }
    return best;
}

CramerCheck cramer_count_check(const ChebyshevOracle& oracle, double x, double c) {
    if (!(x >= 2)) throw std::invalid_argument("cramer_count_check: x must be >= 2");
    if (c < 0) throw std::invalid_argument("cramer_count_check: c must be >= 0");
    const double upper = x + c * std::sqrt(x) * std::log(x);
    if (upper > static_cast<double>(oracle.coverage()))
        throw std::out_of_range("cramer_count_check: window beyond sieve coverage");
    CramerCheck out;
    out.count = oracle.prime_count(upper) - oracle.prime_count(x);
    out.threshold = std::sqrt(x);
    out.pass = static_cast<double>(out.count) > out.threshold;
    return out;
}

CramerScanResult cramer_scan(const ChebyshevOracle& oracle, std::uint64_t x_lo,
                             std::uint64_t x_hi, double c) {
    if (x_lo < 2 || x_hi < x_lo) throw std::invalid_argument("cramer_scan: bad range");
    const double top =
        static_cast<double>(x_hi) + c * std::sqrt(static_cast<double>(x_hi)) *
                                        std::log(static_cast<double>(x_hi));
    if (top > static_cast<double>(oracle.coverage()))
        throw std::out_of_range("cramer_scan: window beyond sieve coverage");

    const auto& primes = oracle.primes();
    CramerScanResult res;
    res.worst_margin = std::numeric_limits<double>::infinity();
    // Both window ends are increasing in x, so two monotone indices suffice.
    std::size_t lo_idx = oracle.prime_count(static_cast<double>(x_lo));
    std::size_t hi_idx = lo_idx;
    for (std::uint64_t x = x_lo; x <= x_hi; ++x) {
        const double xd = static_cast<double>(x);
        const double upper = xd + c * std::sqrt(xd) * std::log(xd);
        while (lo_idx < primes.size() && static_cast<double>(primes[lo_idx]) <= xd) ++lo_idx;
        while (hi_idx < primes.size() && static_cast<double>(primes[hi_idx]) <= upper) ++hi_idx;
        const auto count = static_cast<std::uint64_t>(hi_idx - lo_idx);
        const double margin = static_cast<double>(count) - std::sqrt(xd);
        if (margin < res.worst_margin) {
            res.worst_margin = margin;
            res.worst_x = x;
        }
        if (!(margin > 0)) {
            res.all_pass = false;
            ++res.failures;
        }
        ++res.checked;
    }
    return res;
}

SchoenfeldCheck schoenfeld_check(const ChebyshevOracle& oracle, double x) {
    if (!(x >= 121)) throw std::domain_error("schoenfeld_check: stated only for x >= 121");
    if (x > static_cast<double>(oracle.coverage()))
        throw std::out_of_range("schoenfeld_check: x beyond sieve coverage");
    SchoenfeldCheck out;
    out.diff = oracle.psi(x) - oracle.theta(x);
    out.lower = 0.98 * std::sqrt(x);
    out.upper = 1.11 * std::sqrt(x) + 3.0 * std::cbrt(x);
    out.lower_ok = out.lower < out.diff;
    out.upper_ok = out.diff < out.upper;
    return out;
}

SchoenfeldScanResult schoenfeld_scan(const ChebyshevOracle& oracle, std::uint64_t x_lo,
                                     std::uint64_t x_hi) {
    if (x_lo < 121) throw std::domain_error("schoenfeld_scan: stated only for x >= 121");
    if (x_hi < x_lo) throw std::invalid_argument("schoenfeld_scan: bad range");
    if (static_cast<double>(x_hi) > static_cast<double>(oracle.coverage()))
        throw std::out_of_range("schoenfeld_scan: range beyond sieve coverage");

    SchoenfeldScanResult res;
    res.worst_lower_margin = std::numeric_limits<double>::infinity();
    res.worst_upper_margin = std::numeric_limits<double>::infinity();

    // Running psi - theta: add Lambda at proper prime powers only.
    const auto& pw = oracle.prime_powers();
    KahanSum diff;
    std::size_t k = 0;
    for (; k < pw.size() && pw[k].n < x_lo; ++k)
        if (pw[k].power >= 2) diff.add(pw[k].log_p);

    for (std::uint64_t x = x_lo; x <= x_hi; ++x) {
        for (; k < pw.size() && pw[k].n == x; ++k)
            if (pw[k].power >= 2) diff.add(pw[k].log_p);
        const double xd = static_cast<double>(x);
        const double d = diff.value();
        const double lower_margin = d - 0.98 * std::sqrt(xd);
        const double upper_margin = 1.11 * std::sqrt(xd) + 3.0 * std::cbrt(xd) - d;
        if (lower_margin < res.worst_lower_margin) {
            res.worst_lower_margin = lower_margin;
            res.worst_lower_x = x;
        }
        if (upper_margin < res.worst_upper_margin) {
            res.worst_upper_margin = upper_margin;
            res.worst_upper_x = x;
        }
        if (!(lower_margin > 0)) res.all_lower_ok = false;
        if (!(upper_margin > 0)) res.all_upper_ok = false;
        ++res.checked;
    }
    return res;
}

}  // namespace primegap
