#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <stdexcept>
#include <vector>

#include "primegap/gap_verify.hpp"
#include "primegap/sieve.hpp"

using namespace primegap;

namespace {

constexpr double k4OverPi = 4.0 / std::numbers::pi;

const ChebyshevOracle& oracle() {
    static const ChebyshevOracle o(sieve_window(2, 220000));
    return o;
}

// Dense-scan ground truth on the 1/16 grid: the set of prime pairs whose
// interval [p, q) contains a grid x with no prime in (x - c sqrt x log x, x].
std::set<std::uint64_t> dense_failures(double c, double x_max) {
    std::set<std::uint64_t> bad;
    for (double x = 2.0; x <= x_max; x += 1.0 / 16.0) {
        const std::uint64_t p = oracle().prev_prime(x);
        if (x - c * std::sqrt(x) * std::log(x) >= static_cast<double>(p)) bad.insert(p);
    }
    return bad;
}

}  // namespace

TEST_CASE("interval claim passes for c = 4/pi at small scale") {
    const auto res = verify_interval_claim(oracle(), k4OverPi, 66799);
    CHECK(res.pass());
    CHECK(res.pairs_checked > 6000);
    CHECK(res.dense_scan_end >= 8.0);
}

TEST_CASE("narrow intervals fail and produce sound certificates") {
    const auto res = verify_interval_claim(oracle(), 0.05, 100);
    REQUIRE_FALSE(res.failures.empty());
    for (const auto& f : res.failures) {
        CHECK(f.p_hi == oracle().next_prime(static_cast<double>(f.p_lo)));
        CHECK(f.gap == f.p_hi - f.p_lo);
        CHECK(f.gap > 0);
        CHECK(f.normalized > 0);
    }
}

TEST_CASE("pair reduction never passes what the dense scan fails") {
    for (double c : {0.5, k4OverPi, 1.6}) {
        const double x_max = 100000;
        const auto res = verify_interval_claim(oracle(), c, static_cast<std::uint64_t>(x_max));
        std::set<std::uint64_t> reported;
        for (const auto& f : res.failures) reported.insert(f.p_lo);
        for (std::uint64_t p : dense_failures(c, x_max)) {
            CAPTURE(c);
            CAPTURE(p);
            REQUIRE(reported.count(p) == 1);
        }
    }
}

TEST_CASE("c = 0.5 sits below the small-prime normalized gaps") {
    // d_max(100) = 0.5557 at (3, 5), so the 0.5-claim must fail there.
    const auto res = verify_interval_claim(oracle(), 0.5, 100);
    std::set<std::uint64_t> reported;
    for (const auto& f : res.failures) reported.insert(f.p_lo);
    CHECK(reported.count(3) == 1);
    CHECK(reported.count(7) == 1);
}

TEST_CASE("max normalized gap matches a full-scan oracle") {
    // Independent scan over every pair below 100.
    const auto primes = sieve_window(2, 100).primes();
    double best = -1;
    std::uint64_t best_lo = 0;
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
        const double q = static_cast<double>(primes[i + 1]);
        const double norm = static_cast<double>(primes[i + 1] - primes[i]) /
                            (std::sqrt(q) * std::log(q));
        if (norm > best) {
            best = norm;
            best_lo = primes[i];
        }
    }
    const auto mg = max_normalized_gap(oracle(), 100);
    CHECK(mg.d_max == doctest::Approx(best).epsilon(1e-15));
    CHECK(mg.certificate.p_lo == best_lo);
    CHECK(mg.certificate.p_lo == 3);  // (3,5) is the normalized-gap champion
    CHECK(mg.d_max < k4OverPi);

    // Nondecreasing in the scan bound.
    CHECK(max_normalized_gap(oracle(), 1000).d_max >= mg.d_max);
    CHECK(max_normalized_gap(oracle(), 200000).d_max >= mg.d_max);
    CHECK_THROWS_AS(max_normalized_gap(oracle(), 2), std::invalid_argument);
}

TEST_CASE("cramer count check") {
    const auto good = cramer_count_check(oracle(), 1e5, 3.1);
    CHECK(good.pass);
    CHECK(static_cast<double>(good.count) > good.threshold);

    const auto zero = cramer_count_check(oracle(), 1e5, 0.0);
    CHECK(zero.count == 0);
    CHECK_FALSE(zero.pass);

    // c = 0.5: recorded, no a-priori assertion.
    const auto half = cramer_count_check(oracle(), 1e5, 0.5);
    CHECK(half.threshold == doctest::Approx(std::sqrt(1e5)));

    CHECK_THROWS_AS(cramer_count_check(oracle(), 1.0, 3.1), std::invalid_argument);
    CHECK_THROWS_AS(cramer_count_check(oracle(), 219000.0, 3.1), std::out_of_range);
}

TEST_CASE("cramer scan agrees with per-x checks") {
    const auto scan = cramer_scan(oracle(), 1000, 2000, 3.1);
    CHECK(scan.all_pass);
    CHECK(scan.checked == 1001);
    double worst = 1e300;
    std::uint64_t worst_x = 0;
    for (std::uint64_t x = 1000; x <= 2000; ++x) {
        const auto r = cramer_count_check(oracle(), static_cast<double>(x), 3.1);
        const double margin = static_cast<double>(r.count) - r.threshold;
        if (margin < worst) {
            worst = margin;
            worst_x = x;
        }
    }
    CHECK(scan.worst_margin == doctest::Approx(worst).epsilon(1e-12));
    CHECK(scan.worst_x == worst_x);
}

TEST_CASE("schoenfeld sandwich: boundary, guard, scan consistency") {
    const auto at121 = schoenfeld_check(oracle(), 121.0);
    CHECK(at121.lower_ok);
    CHECK(at121.upper_ok);
    CHECK(at121.diff == doctest::Approx(5 * std::log(2.0) + 3 * std::log(3.0) +
                                        std::log(5.0) + std::log(7.0) + std::log(11.0))
                            .epsilon(1e-12));
    CHECK_THROWS_AS(schoenfeld_check(oracle(), 50.0), std::domain_error);

    const auto scan = schoenfeld_scan(oracle(), 121, 200000);
    CHECK(scan.all_lower_ok);
    CHECK(scan.all_upper_ok);
    CHECK(scan.checked == 200000 - 121 + 1);

    // Spot-check the reported worst points against the single-x evaluator.
    const auto worst_low = schoenfeld_check(oracle(), static_cast<double>(scan.worst_lower_x));
    CHECK(worst_low.diff - worst_low.lower ==
          doctest::Approx(scan.worst_lower_margin).epsilon(1e-9));
    const auto worst_up = schoenfeld_check(oracle(), static_cast<double>(scan.worst_upper_x));
    CHECK(worst_up.upper - worst_up.diff ==
          doctest::Approx(scan.worst_upper_margin).epsilon(1e-9));
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(verify_interval_claim(oracle(), 0.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(verify_interval_claim(oracle(), 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_interval_claim(oracle(), 1.0, 300000), std::out_of_range);
    CHECK_THROWS_AS(schoenfeld_scan(oracle(), 50, 1000), std::domain_error);
    CHECK_THROWS_AS(cramer_scan(oracle(), 1, 10, 1.0), std::invalid_argument);
}
