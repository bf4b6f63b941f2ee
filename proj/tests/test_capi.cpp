#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "primegap.h"

namespace {

const std::string kTable100 = std::string(PRIMEGAP_TEST_DATA_DIR) + "/zeros_100.txt";

struct Sieve {
    pg_sieve* s = nullptr;
    explicit Sieve(uint64_t hi) { REQUIRE(pg_sieve_create(hi, &s) == PG_OK); }
    ~Sieve() { pg_sieve_free(s); }
};

struct Zeros {
    pg_zeros* z = nullptr;
    explicit Zeros(uint64_t limit = 0) {
        REQUIRE(pg_zeros_load(kTable100.c_str(), limit, &z) == PG_OK);
    }
    ~Zeros() { pg_zeros_free(z); }
};

}  // namespace

TEST_CASE("sieve handle lifecycle and queries") {
    Sieve sv(1000);
    CHECK(pg_sieve_coverage(sv.s) == 1000);
    CHECK(pg_sieve_is_prime(sv.s, 997) == 1);
    CHECK(pg_sieve_is_prime(sv.s, 999) == 0);

    pg_chebyshev_values v{};
    REQUIRE(pg_sieve_chebyshev(sv.s, 10.0, &v) == PG_OK);
    CHECK(v.psi == doctest::Approx(7.83201418050547).epsilon(1e-12));
    CHECK(v.theta == doctest::Approx(5.34710753071747).epsilon(1e-12));
    CHECK(v.psi1 == doctest::Approx(33.7641732076404).epsilon(1e-12));
    CHECK(v.pi == 4);

    uint64_t p = 0;
    REQUIRE(pg_sieve_prev_prime(sv.s, 10.0, &p) == PG_OK);
    CHECK(p == 7);
    REQUIRE(pg_sieve_next_prime(sv.s, 7.0, &p) == PG_OK);
    CHECK(p == 11);
}

TEST_CASE("error codes and messages") {
    Sieve sv(1000);
    pg_chebyshev_values v{};
    CHECK(pg_sieve_chebyshev(sv.s, 1.0, &v) == PG_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(pg_last_error()) > 0);
    CHECK(pg_sieve_chebyshev(sv.s, 5000.0, &v) == PG_ERR_COVERAGE);
    CHECK(pg_sieve_chebyshev(nullptr, 5.0, &v) == PG_ERR_INVALID_ARGUMENT);

    double d = 0;
    CHECK(pg_nt_bound(10.0, &d) == PG_ERR_DOMAIN);
    CHECK(pg_nt_bound(100.0, nullptr) == PG_ERR_INVALID_ARGUMENT);

    pg_zeros* z = nullptr;
    CHECK(pg_zeros_load("./definitely_missing.txt", 0, &z) == PG_ERR_PARSE);
    CHECK(z == nullptr);

    pg_sieve* too_big = nullptr;
    // span guard: 2^31 + slack integers exceed the default budget
    CHECK(pg_sieve_create((1ull << 31) + 16, &too_big) == PG_ERR_BUDGET);
}

TEST_CASE("zero table handle") {
    Zeros zt;
    CHECK(pg_zeros_count(zt.z) == 100);
    CHECK(pg_zeros_ordinate(zt.z, 0) == doctest::Approx(14.134725141735).epsilon(1e-12));
    CHECK(std::isnan(pg_zeros_ordinate(zt.z, 100)));
    CHECK(std::strlen(pg_zeros_digest(zt.z)) == 16);

    uint64_t below = 0;
    REQUIRE(pg_zeros_count_below(zt.z, 100.0, &below) == PG_OK);
    CHECK(below == 29);
    CHECK(pg_zeros_count_below(zt.z, 1000.0, &below) == PG_ERR_COVERAGE);

    Zeros again;
    CHECK(std::string(pg_zeros_digest(zt.z)) == pg_zeros_digest(again.z));

    double partial = 0, tail = 0;
    REQUIRE(pg_sum_inv_rho_sq(zt.z, &partial, &tail) == PG_OK);
    CHECK(partial > 0.039);
    CHECK(partial + tail > 0.04619141793224207);
}

TEST_CASE("explicit formula across the C surface") {
    Zeros zt;
    pg_explicit_eval ev{};
    REQUIRE(pg_psi1_explicit(zt.z, 10.0, 0, 1, &ev) == PG_OK);
    CHECK(ev.value == doctest::Approx(31.6212293359065).epsilon(1e-12));

    REQUIRE(pg_psi_explicit(zt.z, 1000.0, 10, 1, &ev) == PG_OK);
    CHECK(ev.x == 1000.5);  // documented half-shift
    CHECK(ev.zeros_used == 10);
    CHECK(ev.value == doctest::Approx(ev.main_term - ev.zero_sum + ev.small_terms));

    CHECK(pg_psi_explicit(zt.z, 1000.5, 101, 1, &ev) == PG_ERR_INVALID_ARGUMENT);

    Sieve sv(10000);
    double center = 0, half = 0;
    REQUIRE(pg_residual_epsilon(sv.s, zt.z, 5000.5, 100, 1, &center, &half) == PG_OK);
    CHECK(half > 0);
    CHECK(std::abs(center) < 12.0 / 5.0 + half);

    double w = 0;
    REQUIRE(pg_weight_w(95.0, 100.5, 10.0, &w) == PG_OK);
    CHECK(w == doctest::Approx(0.45));

    double direct = 0, via = 0;
    REQUIRE(pg_weighted_sum_direct(sv.s, 1000.5, 50.5, &direct) == PG_OK);
    REQUIRE(pg_weighted_sum_via_psi1(sv.s, 1000.5, 50.5, &via) == PG_OK);
    CHECK(direct == doctest::Approx(via).epsilon(1e-9));

    pg_sigma_split sp{};
    REQUIRE(pg_sigma_exact(zt.z, 3000.5, 100.0, 2.0, 1, &sp) == PG_OK);
    CHECK(sp.has_bounds == 1);
    CHECK(std::abs(sp.sigma1) <= sp.sigma1_bound);

    double v = 0;
    REQUIRE(pg_sigma1_bound(1e6, 1e3, 2.0, &v) == PG_OK);
    CHECK(v == doctest::Approx(4841306.05207393).epsilon(1e-10));
    REQUIRE(pg_lower_bound_psi_window(65000.0, 1798.65, 2.0, &v) == PG_OK);
    CHECK(v > 0);
}

TEST_CASE("gap verification across the C surface") {
    Sieve sv(2000);
    uint64_t failures = 0, pairs = 0;
    REQUIRE(pg_verify_interval_claim(sv.s, 4.0 / 3.141592653589793, 1000, nullptr, nullptr,
                                     &failures, &pairs) == PG_OK);
    CHECK(failures == 0);
    CHECK(pairs > 100);

    std::vector<pg_gap_certificate> certs;
    auto cb = [](const pg_gap_certificate* c, void* user) -> int {
        static_cast<std::vector<pg_gap_certificate>*>(user)->push_back(*c);
        return 0;
    };
    REQUIRE(pg_verify_interval_claim(sv.s, 0.05, 100, cb, &certs, &failures, nullptr) == PG_OK);
    CHECK(failures > 0);
    CHECK(certs.size() == failures);
    for (const auto& c : certs) {
        CHECK(c.gap == c.p_hi - c.p_lo);
        CHECK(c.normalized > 0);
    }

    pg_gap_certificate cert{};
    double d_max = 0;
    REQUIRE(pg_max_normalized_gap(sv.s, 100, &cert, &d_max) == PG_OK);
    CHECK(cert.p_lo == 3);
    CHECK(d_max == doctest::Approx(2.0 / (std::sqrt(5.0) * std::log(5.0))).epsilon(1e-12));

    uint64_t count = 0;
    double threshold = 0;
    int pass = 0;
    REQUIRE(pg_cramer_count_check(sv.s, 100.0, 1.0, &count, &threshold, &pass) == PG_OK);
    CHECK(threshold == doctest::Approx(10.0));

    pg_cramer_scan_result cs{};
    REQUIRE(pg_cramer_scan(sv.s, 100, 200, 1.0, &cs) == PG_OK);
    CHECK(cs.checked == 101);

    int lower_ok = 0, upper_ok = 0;
    double diff = 0;
    REQUIRE(pg_schoenfeld_check(sv.s, 121.0, &lower_ok, &upper_ok, &diff) == PG_OK);
    CHECK(lower_ok == 1);
    CHECK(upper_ok == 1);

    pg_schoenfeld_scan_result ss{};
    REQUIRE(pg_schoenfeld_scan(sv.s, 121, 1500, &ss) == PG_OK);
    CHECK(ss.all_lower_ok == 1);
    CHECK(ss.all_upper_ok == 1);
}

TEST_CASE("window powers streaming with early stop") {
    Sieve sv(100);
    int seen = 0;
    auto cb = [](const pg_prime_power* pp, void* user) -> int {
        auto* n = static_cast<int*>(user);
        ++*n;
        CHECK(pp->n >= 24);
        return *n >= 1 ? 1 : 0;  // stop after the first record
    };
    REQUIRE(pg_sieve_window_powers(sv.s, 24, 28, cb, &seen) == PG_OK);
    CHECK(seen == 1);
    CHECK(pg_sieve_window_powers(sv.s, 2, 200, cb, &seen) == PG_ERR_COVERAGE);
}

TEST_CASE("constants across the C surface") {
    double astar = 0, value = 0;
    REQUIRE(pg_minimize_asymptotic(0, 0, &astar, &value) == PG_OK);
    CHECK(std::abs(astar - 2.0) < 1e-6);
    CHECK(std::abs(value - 4.0 / 3.141592653589793) < 1e-9);

    double iv = 0, err = 0;
    REQUIRE(pg_sinc2_integral(1.0, &iv, &err) == PG_OK);
    CHECK(iv == doctest::Approx(0.89733955852912366).epsilon(1e-10));
    CHECK(pg_sinc2_integral(-1.0, &iv, &err) == PG_ERR_INVALID_ARGUMENT);

    pg_constant_report rep{};
    REQUIRE(pg_constant_report_run(1000.0, &rep) == PG_OK);
    CHECK(rep.theorem2_constant == doctest::Approx(1.00063609408370).epsilon(1e-10));
    CHECK(rep.cramer_constant == doctest::Approx(3.00063609408370).epsilon(1e-10));

    double a = 0;
    REQUIRE(pg_alpha_for_epsilon(0.01, &a) == PG_OK);
    double c = 0;
    REQUIRE(pg_c_alpha(a, &c) == PG_OK);
    CHECK(c <= 0.51);
}

TEST_CASE("version string") {
    CHECK(std::strlen(pg_version()) > 0);
}
