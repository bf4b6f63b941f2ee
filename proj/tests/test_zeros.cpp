#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>

#include "primegap/zeros.hpp"

using namespace primegap;

namespace {

const std::string kTable100 = std::string(PRIMEGAP_TEST_DATA_DIR) + "/zeros_100.txt";

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("./") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("loads and validates the reference table") {
    const auto t = load_zeros(kTable100);
    CHECK(t.count() == 100);
    CHECK(t.ordinate(0) == doctest::Approx(14.134725141735).epsilon(1e-12));
    CHECK(t.ordinate(1) == doctest::Approx(21.022039638772).epsilon(1e-12));
    CHECK(t.ordinate(2) == doctest::Approx(25.010857580146).epsilon(1e-12));
    CHECK(t.max_ordinate() == doctest::Approx(236.524229665816).epsilon(1e-12));
    CHECK_FALSE(t.source_digest().empty());
}

TEST_CASE("loading is idempotent and limit is honored") {
    const auto a = load_zeros(kTable100);
    const auto b = load_zeros(kTable100);
    CHECK(a.source_digest() == b.source_digest());

    const auto few = load_zeros(kTable100, 10);
    CHECK(few.count() == 10);
    CHECK(few.max_ordinate() == doctest::Approx(49.773832477672).epsilon(1e-9));
}

TEST_CASE("rejects malformed tables") {
    CHECK_THROWS_WITH_AS(load_zeros(write_temp("zt_empty.txt", "# only a comment\n")),
                         doctest::Contains("empty"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        load_zeros(write_temp("zt_order.txt", "14.134725\n25.010858\n21.022040\n")),
        doctest::Contains("line 3"), std::runtime_error);
    CHECK_THROWS_WITH_AS(load_zeros(write_temp("zt_garbage.txt", "14.134725\nnot-a-number\n")),
                         doctest::Contains("line 2"), std::runtime_error);
    CHECK_THROWS_AS(load_zeros(write_temp("zt_low.txt", "13.9\n21.0\n")), std::runtime_error);
    CHECK_THROWS_AS(load_zeros(write_temp("zt_anchor.txt", "15.5\n21.0\n")), std::runtime_error);
    CHECK_THROWS_AS(load_zeros("./no_such_file.txt"), std::runtime_error);
}

TEST_CASE("comments and whitespace are tolerated") {
    const auto t = load_zeros(write_temp(
        "zt_ok.txt", "# header\n  14.134725141734694 \n\n21.022039638771555\n# trailing\n"));
    CHECK(t.count() == 2);
}

TEST_CASE("count_below") {
    const auto t = load_zeros(kTable100);
    CHECK(t.count_below(15.0) == 1);
    CHECK(t.count_below(100.0) == 29);
    CHECK(t.count_below(t.ordinate(0) - 0.01) == 0);
    CHECK(t.count_below(t.max_ordinate()) == 99);  // strict: the max itself not counted
    CHECK_THROWS_AS(t.count_below(t.max_ordinate() + 1.0), std::out_of_range);
    CHECK_THROWS_AS(t.count_below(0.0), std::invalid_argument);
}

TEST_CASE("nt_bound values and validity cutoff") {
    CHECK(nt_bound(100.0) == doctest::Approx(73.2935598879428).epsilon(1e-12));
    CHECK(nt_bound(15.0 + 1e-9) == doctest::Approx(6.46499363469627).epsilon(1e-9));
    CHECK_THROWS_AS(nt_bound(15.0), std::domain_error);
    CHECK_THROWS_AS(nt_bound(std::numbers::e), std::domain_error);
}

TEST_CASE("tail_gamma_sq_bound values and validity cutoff") {
    CHECK(tail_gamma_sq_bound(100.0) == doctest::Approx(7.32935598879428e-3).epsilon(1e-12));
    CHECK(tail_gamma_sq_bound(1000.0) == doctest::Approx(1.09940339831914e-3).epsilon(1e-12));
    CHECK_THROWS_AS(tail_gamma_sq_bound(15.0), std::domain_error);
}

TEST_CASE("zero-count bound holds on real data") {
    const auto t = load_zeros(kTable100);
    for (std::size_t k = 0; k < t.count(); ++k) {
        const double g = t.ordinate(k);
        if (g <= 15.0) continue;
        // N(T) reaches k+1 just above g, where the bound is at its smallest.
        REQUIRE(static_cast<double>(k + 1) < nt_bound(std::nextafter(g, 1e30)));
    }
}

TEST_CASE("gamma^-2 tail partial sums stay below the bound") {
    const auto t = load_zeros(kTable100);
    for (int i = 0; i < 40; ++i) {
        const double T = 16.0 + i * 5.0;
        if (T >= t.max_ordinate()) break;
        double partial = 0;
        for (std::size_t k = t.count(); k-- > 0;) {
            const double g = t.ordinate(k);
            if (g <= T) break;
            partial += 1.0 / (g * g);
        }
        REQUIRE(partial < tail_gamma_sq_bound(T));
    }
}

TEST_CASE("tail partials from the shipped 10^4 table") {
    const auto big = load_zeros(PRIMEGAP_ZEROS_10K);
    REQUIRE(big.count() == 10000);
    auto partial_beyond = [&](const ZeroTable& t, double T) {
        double s = 0;
        for (std::size_t k = t.count(); k-- > 0;) {
            const double g = t.ordinate(k);
            if (g <= T) break;
            s += 1.0 / (g * g);
        }
        return s;
    };
    const double at100 = partial_beyond(big, 100.0);
    CHECK(at100 < 7.3294e-3);  // strictly below log(100)/(200 pi)
    CHECK(at100 < tail_gamma_sq_bound(100.0));
    // The gap to the bound shrinks as the table grows.
    const auto small = load_zeros(PRIMEGAP_ZEROS_10K, 1000);
    CHECK(partial_beyond(small, 50.0) <= partial_beyond(big, 50.0));
    CHECK(tail_gamma_sq_bound(50.0) - partial_beyond(big, 50.0) <
          tail_gamma_sq_bound(50.0) - partial_beyond(small, 50.0));
}

TEST_CASE("sum over |rho|^-2: single zero, monotonicity, closed-form sandwich") {
    const auto single = load_zeros(write_temp("zt_single.txt", "14.134725\n"));
    const auto s1 = sum_inv_rho_sq(single);
    CHECK(s1.partial ==
          doctest::Approx(2.0 / (0.25 + 14.134725 * 14.134725)).epsilon(1e-14));

    const auto t10 = load_zeros(kTable100, 10);
    const auto t100 = load_zeros(kTable100);
    const auto p10 = sum_inv_rho_sq(t10);
    const auto p100 = sum_inv_rho_sq(t100);
    CHECK(p100.partial > p10.partial);  // adding zeros never decreases the sum

    // Externally sourced oracle: sum over all zeros of 1/|rho|^2 equals
    // 2 + Euler-gamma - log(4 pi) = 0.04619141793224207 under RH pairing.
    const double closed_form = 0.04619141793224207;
    CHECK(p100.lower() <= closed_form);
    CHECK(p100.upper() >= closed_form);
    CHECK(p10.lower() <= closed_form);
    CHECK(p10.upper() >= closed_form);
    // Bounded above by oracle + slack on any table.
    CHECK(p100.partial < 0.0462 + 1e-4);
}
