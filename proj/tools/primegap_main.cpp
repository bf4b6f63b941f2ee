// primegap CLI: exposes the toolkit over the C API with machine-readable
// output (JSON lines, CSV) for reproduction runs and plot data.
//
// Commands: sieve, zeros-audit, explicit, verify-gap, verify-cramer,
// schoenfeld, constants, report. Any failed mathematical check exits
// nonzero. Output is deterministic for a fixed config; thread count changes
// timings only.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "primegap.h"

using nlohmann::json;

namespace {

enum class Format { text, jsonl, csv };

struct Out {
    Format format = Format::text;
    bool csv_header_done = false;

    void record(const json& j, const std::string& text_line) {
        switch (format) {
            case Format::jsonl:
                std::cout << j.dump() << "\n";
                break;
            case Format::csv: {
                if (!csv_header_done) {
                    bool first = true;
                    for (auto it = j.begin(); it != j.end(); ++it) {
                        std::cout << (first ? "" : ",") << it.key();
                        first = false;
                    }
                    std::cout << "\n";
                    csv_header_done = true;
                }
                bool first = true;
                for (auto it = j.begin(); it != j.end(); ++it) {
                    std::cout << (first ? "" : ",");
                    if (it->is_string())
                        std::cout << it->get<std::string>();
                    else
                        std::cout << it->dump();
                    first = false;
                }
                std::cout << "\n";
                break;
            }
            case Format::text:
                std::cout << text_line << "\n";
                break;
        }
        std::cout.flush();  // keep partial output usable on interrupt
    }
};

[[noreturn]] void die(const char* where) {
    std::cerr << "error: " << where << ": " << pg_last_error() << "\n";
    std::exit(2);
}

void check(pg_status st, const char* where) {
    if (st != PG_OK) die(where);
}

struct SieveHandle {
    pg_sieve* s = nullptr;
    ~SieveHandle() { pg_sieve_free(s); }
};

struct ZerosHandle {
    pg_zeros* z = nullptr;
    ~ZerosHandle() { pg_zeros_free(z); }
};

std::string default_zeros_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("PRIMEGAP_ZERO_TABLE")) return env;
    return "";
}

pg_zeros* load_zeros_or_die(const std::string& path, std::uint64_t limit) {
    if (path.empty()) {
        std::cerr << "error: no zero table; pass --zeros or set PRIMEGAP_ZERO_TABLE\n";
        std::exit(2);
    }
    pg_zeros* z = nullptr;
    check(pg_zeros_load(path.c_str(), limit, &z), "load zeros");
    return z;
}

int cmd_sieve(std::uint64_t lo, std::uint64_t hi, const std::vector<double>& cheb_at, Out& out) {
    SieveHandle sh;
    check(pg_sieve_create(hi, &sh.s), "sieve");
    struct Ctx {
        Out* out;
        std::uint64_t primes = 0, powers = 0;
    } ctx{&out};
    auto cb = [](const pg_prime_power* pp, void* user) -> int {
        auto* c = static_cast<Ctx*>(user);
        json j{{"type", "prime_power"}, {"n", pp->n}, {"lambda", pp->log_p}, {"power", pp->power}};
        char line[96];
        std::snprintf(line, sizeof line, "n=%llu Lambda=%.12f power=%u",
                      static_cast<unsigned long long>(pp->n), pp->log_p, pp->power);
        c->out->record(j, line);
        ++c->powers;
        if (pp->power == 1) ++c->primes;
        return 0;
    };
    check(pg_sieve_window_powers(sh.s, lo, hi, cb, &ctx), "window powers");
    std::cerr << "window [" << lo << ", " << hi << "]: " << ctx.primes << " primes, "
              << ctx.powers << " prime powers\n";
    for (double x : cheb_at) {
        pg_chebyshev_values v{};
        check(pg_sieve_chebyshev(sh.s, x, &v), "chebyshev");
        json j{{"type", "chebyshev"}, {"x", v.x},       {"psi", v.psi},
               {"theta", v.theta},    {"psi1", v.psi1}, {"pi", v.pi}};
        char line[160];
        std::snprintf(line, sizeof line, "x=%.6f psi=%.9f theta=%.9f psi1=%.9f pi=%llu", v.x,
                      v.psi, v.theta, v.psi1, static_cast<unsigned long long>(v.pi));
        out.record(j, line);
    }
    return 0;
}

int cmd_zeros_audit(const std::string& path, std::uint64_t limit, Out& out) {
    ZerosHandle zh;
    zh.z = load_zeros_or_die(path, limit);
    const std::uint64_t n = pg_zeros_count(zh.z);
    const double maxo = pg_zeros_max_ordinate(zh.z);
    bool all_ok = true;

    // N(T) bound audit just above every ordinate past 15.
    std::uint64_t nt_checked = 0;
    bool nt_ok = true;
    for (std::uint64_t k = 0; k < n; ++k) {
        const double g = pg_zeros_ordinate(zh.z, k);
        if (g <= 15.0) continue;
        double bound = 0;
        check(pg_nt_bound(std::nextafter(g, 1e300), &bound), "nt bound");
        ++nt_checked;
        if (!(static_cast<double>(k + 1) < bound)) {
            nt_ok = false;
            all_ok = false;
        }
    }
    out.record(json{{"type", "nt_bound_audit"}, {"checked", nt_checked}, {"pass", nt_ok}},
               "N(T) < T log T/(2 pi): " + std::to_string(nt_checked) +
                   " ordinates checked, " + (nt_ok ? "pass" : "FAIL"));

    // Tail-sum audit on a T grid.
    bool tail_ok = true;
    for (int i = 0; i < 50; ++i) {
        const double T = 16.0 * std::pow(maxo * 0.999 / 16.0, i / 49.0);
        double partial = 0;
        for (std::uint64_t k = n; k-- > 0;) {
            const double g = pg_zeros_ordinate(zh.z, k);
            if (g <= T) break;
            partial += 1.0 / (g * g);
        }
        double bound = 0;
        check(pg_tail_gamma_sq_bound(T, &bound), "tail bound");
        if (!(partial < bound)) {
            tail_ok = false;
            all_ok = false;
        }
    }
    out.record(json{{"type", "tail_audit"}, {"grid", 50}, {"pass", tail_ok}},
               std::string("gamma^-2 tails below log T/(2 pi T): ") +
                   (tail_ok ? "pass" : "FAIL"));

    double partial = 0, tail = 0;
    check(pg_sum_inv_rho_sq(zh.z, &partial, &tail), "sum inv rho sq");
    json j{{"type", "inv_rho_sq"},   {"zeros", n},          {"max_ordinate", maxo},
           {"partial", partial},     {"tail_bound", tail},  {"digest", pg_zeros_digest(zh.z)}};
    char line[200];
    std::snprintf(line, sizeof line,
                  "%llu zeros to %.3f; sum |rho|^-2 in [%.9f, %.9f]; digest %s",
                  static_cast<unsigned long long>(n), maxo, partial, partial + tail,
                  pg_zeros_digest(zh.z));
    out.record(j, line);
    return all_ok ? 0 : 1;
}

int cmd_explicit(const std::string& zeros, double x, std::uint64_t k, bool psi1,
                 std::uint64_t sieve_hi, unsigned threads, Out& out) {
    ZerosHandle zh;
    zh.z = load_zeros_or_die(zeros, 0);
    pg_explicit_eval ev{};
    check(psi1 ? pg_psi1_explicit(zh.z, x, k, threads, &ev)
               : pg_psi_explicit(zh.z, x, k, threads, &ev),
          "explicit eval");
    json j{{"type", psi1 ? "psi1_explicit" : "psi_explicit"},
           {"x", ev.x},
           {"zeros_used", ev.zeros_used},
           {"main_term", ev.main_term},
           {"zero_sum", ev.zero_sum},
           {"small_terms", ev.small_terms},
           {"value", ev.value},
           {"truncation_tail_bound", ev.truncation_tail_bound}};
    char line[256];
    std::snprintf(line, sizeof line,
                  "%s(x=%.6f, K=%llu) = %.9f  (main %.9f, zero sum %.9f, tail bound %.3e)",
                  psi1 ? "psi1" : "psi", ev.x, static_cast<unsigned long long>(ev.zeros_used),
                  ev.value, ev.main_term, ev.zero_sum, ev.truncation_tail_bound);
    out.record(j, line);

    if (sieve_hi > 0) {
        SieveHandle sh;
        check(pg_sieve_create(sieve_hi, &sh.s), "sieve");
        pg_chebyshev_values v{};
        check(pg_sieve_chebyshev(sh.s, ev.x, &v), "chebyshev");
        const double truth = psi1 ? v.psi1 : v.psi;
        json cmp{{"type", "sieve_comparison"},
                 {"x", ev.x},
                 {"sieve_value", truth},
                 {"abs_error", std::abs(ev.value - truth)}};
        std::snprintf(line, sizeof line, "sieve %s(x) = %.9f, |error| = %.6e",
                      psi1 ? "psi1" : "psi", truth, std::abs(ev.value - truth));
        out.record(cmp, line);
    }
    return 0;
}

int cmd_verify_gap(double c, std::uint64_t x_max, bool with_max_gap, Out& out) {
    SieveHandle sh;
    check(pg_sieve_create(x_max + 16, &sh.s), "sieve");
    struct Ctx {
        Out* out;
    } ctx{&out};
    auto cb = [](const pg_gap_certificate* cert, void* user) -> int {
        auto* cx = static_cast<Ctx*>(user);
        json j{{"type", "gap_failure"},
               {"p_lo", cert->p_lo},
               {"p_hi", cert->p_hi},
               {"gap", cert->gap},
               {"normalized", cert->normalized},
               {"passes_4_over_pi", cert->passes_4_over_pi != 0},
               {"passes_8_over_5", cert->passes_8_over_5 != 0}};
        char line[160];
        std::snprintf(line, sizeof line, "FAIL pair (%llu, %llu): gap %llu, normalized %.6f",
                      static_cast<unsigned long long>(cert->p_lo),
                      static_cast<unsigned long long>(cert->p_hi),
                      static_cast<unsigned long long>(cert->gap), cert->normalized);
        cx->out->record(j, line);
        return 0;
    };
    std::uint64_t failures = 0, pairs = 0;
    check(pg_verify_interval_claim(sh.s, c, x_max, cb, &ctx, &failures, &pairs), "verify gap");
    json j{{"type", "gap_summary"},
           {"c", c},
           {"x_max", x_max},
           {"pairs_checked", pairs},
           {"failures", failures}};
    char line[160];
    std::snprintf(line, sizeof line, "c=%.7f x_max=%llu: %llu failures (%llu pairs)", c,
                  static_cast<unsigned long long>(x_max),
                  static_cast<unsigned long long>(failures),
                  static_cast<unsigned long long>(pairs));
    out.record(j, line);

    if (with_max_gap) {
        pg_gap_certificate cert{};
        double d_max = 0;
        check(pg_max_normalized_gap(sh.s, x_max, &cert, &d_max), "max gap");
        json mg{{"type", "max_normalized_gap"},
                {"p_lo", cert.p_lo},
                {"p_hi", cert.p_hi},
                {"gap", cert.gap},
                {"d_max", d_max}};
        std::snprintf(line, sizeof line, "max normalized gap %.6f at (%llu, %llu)", d_max,
                      static_cast<unsigned long long>(cert.p_lo),
                      static_cast<unsigned long long>(cert.p_hi));
        out.record(mg, line);
    }
    return failures == 0 ? 0 : 1;
}

int cmd_verify_cramer(double c, double x, std::uint64_t x_lo, std::uint64_t x_hi, Out& out) {
    if (x > 0) {
        const double w = c * std::sqrt(x) * std::log(x);
        SieveHandle sh;
        check(pg_sieve_create(static_cast<std::uint64_t>(x + w) + 16, &sh.s), "sieve");
        std::uint64_t count = 0;
        double threshold = 0;
        int pass = 0;
        check(pg_cramer_count_check(sh.s, x, c, &count, &threshold, &pass), "cramer check");
        json j{{"type", "cramer_check"}, {"x", x},
               {"c", c},                 {"count", count},
               {"threshold", threshold}, {"pass", pass != 0}};
        char line[160];
        std::snprintf(line, sizeof line, "x=%.1f c=%.3f: count %llu vs sqrt(x)=%.3f -> %s", x, c,
                      static_cast<unsigned long long>(count), threshold,
                      pass ? "pass" : "FAIL");
        out.record(j, line);
        return pass ? 0 : 1;
    }
    const double top = static_cast<double>(x_hi) +
                       c * std::sqrt(static_cast<double>(x_hi)) * std::log(static_cast<double>(x_hi));
    SieveHandle sh;
    check(pg_sieve_create(static_cast<std::uint64_t>(top) + 16, &sh.s), "sieve");
    pg_cramer_scan_result r{};
    check(pg_cramer_scan(sh.s, x_lo, x_hi, c, &r), "cramer scan");
    json j{{"type", "cramer_scan"},   {"c", c},
           {"x_lo", x_lo},            {"x_hi", x_hi},
           {"checked", r.checked},    {"failures", r.failures},
           {"worst_x", r.worst_x},    {"worst_margin", r.worst_margin},
           {"pass", r.all_pass != 0}};
    char line[200];
    std::snprintf(line, sizeof line,
                  "c=%.3f on [%llu, %llu]: %llu failures, worst margin %.2f at x=%llu", c,
                  static_cast<unsigned long long>(x_lo), static_cast<unsigned long long>(x_hi),
                  static_cast<unsigned long long>(r.failures), r.worst_margin,
                  static_cast<unsigned long long>(r.worst_x));
    out.record(j, line);
    return r.all_pass ? 0 : 1;
}

int cmd_schoenfeld(double x, std::uint64_t x_lo, std::uint64_t x_hi, Out& out) {
    if (x > 0) {
        SieveHandle sh;
        check(pg_sieve_create(static_cast<std::uint64_t>(x) + 16, &sh.s), "sieve");
        int lower_ok = 0, upper_ok = 0;
        double diff = 0;
        check(pg_schoenfeld_check(sh.s, x, &lower_ok, &upper_ok, &diff), "schoenfeld");
        json j{{"type", "schoenfeld_check"},
               {"x", x},
               {"psi_minus_theta", diff},
               {"lower_ok", lower_ok != 0},
               {"upper_ok", upper_ok != 0}};
        char line[160];
        std::snprintf(line, sizeof line, "x=%.1f: psi-theta=%.6f, lower %s, upper %s", x, diff,
                      lower_ok ? "ok" : "FAIL", upper_ok ? "ok" : "FAIL");
        out.record(j, line);
        return (lower_ok && upper_ok) ? 0 : 1;
    }
    SieveHandle sh;
    check(pg_sieve_create(x_hi + 16, &sh.s), "sieve");
    pg_schoenfeld_scan_result r{};
    check(pg_schoenfeld_scan(sh.s, x_lo, x_hi, &r), "schoenfeld scan");
    json j{{"type", "schoenfeld_scan"},
           {"x_lo", x_lo},
           {"x_hi", x_hi},
           {"checked", r.checked},
           {"all_lower_ok", r.all_lower_ok != 0},
           {"all_upper_ok", r.all_upper_ok != 0},
           {"worst_lower_x", r.worst_lower_x},
           {"worst_lower_margin", r.worst_lower_margin},
           {"worst_upper_x", r.worst_upper_x},
           {"worst_upper_margin", r.worst_upper_margin}};
    char line[240];
    std::snprintf(line, sizeof line,
                  "[%llu, %llu]: lower %s (worst %.4f at %llu), upper %s (worst %.4f at %llu)",
                  static_cast<unsigned long long>(x_lo), static_cast<unsigned long long>(x_hi),
                  r.all_lower_ok ? "ok" : "FAIL", r.worst_lower_margin,
                  static_cast<unsigned long long>(r.worst_lower_x),
                  r.all_upper_ok ? "ok" : "FAIL", r.worst_upper_margin,
                  static_cast<unsigned long long>(r.worst_upper_x));
    out.record(j, line);
    return (r.all_lower_ok && r.all_upper_ok) ? 0 : 1;
}

int cmd_constants(double alpha, double eps, bool minimize, Out& out) {
    if (minimize) {
        double astar = 0, value = 0;
        check(pg_minimize_asymptotic(0, 0, &astar, &value), "minimize");
        json j{{"type", "minimize_asymptotic"}, {"alpha_star", astar}, {"value", value}};
        char line[120];
        std::snprintf(line, sizeof line, "alpha* = %.9f, minimum = %.12f", astar, value);
        out.record(j, line);
    }
    if (alpha > 0) {
        pg_constant_report r{};
        check(pg_constant_report_run(alpha, &r), "constants");
        double asym = 0;
        check(pg_asymptotic_coefficient(alpha, &asym), "asymptotic");
        json j{{"type", "constant_report"},
               {"alpha", r.alpha},
               {"asymptotic_coefficient", asym},
               {"integral_value", r.integral_value},
               {"quadrature_error_estimate", r.quadrature_error_estimate},
               {"c_alpha", r.c_alpha},
               {"theorem2_constant", r.theorem2_constant},
               {"cramer_constant", r.cramer_constant}};
        char line[240];
        std::snprintf(line, sizeof line,
                      "alpha=%.3f: coeff=%.9f integral=%.12f (err %.1e) c=%.9f "
                      "interval=%.9f cramer=%.9f",
                      r.alpha, asym, r.integral_value, r.quadrature_error_estimate, r.c_alpha,
                      r.theorem2_constant, r.cramer_constant);
        out.record(j, line);
    }
    if (eps > 0) {
        double a = 0;
        check(pg_alpha_for_epsilon(eps, &a), "alpha for eps");
        json j{{"type", "alpha_for_epsilon"}, {"eps", eps}, {"alpha", a}};
        char line[120];
        std::snprintf(line, sizeof line, "c(alpha) <= 1/2 + %.2e needs alpha >= %.3f", eps, a);
        out.record(j, line);
    }
    return 0;
}

int cmd_report(const std::string& zeros, unsigned threads, std::uint64_t gap_max,
               std::uint64_t cramer_max, Out& out) {
    if (zeros.empty()) {
        std::cerr << "error: no zero table; pass --zeros or set PRIMEGAP_ZERO_TABLE\n";
        return 2;
    }
    struct Ctx {
        Out* out;
    } ctx{&out};
    auto cb = [](const pg_criterion_result* r, void* user) -> int {
        auto* cx = static_cast<Ctx*>(user);
        json j{{"type", "criterion"}, {"id", r->id},         {"pass", r->pass != 0},
               {"name", r->name},     {"detail", r->detail}, {"seconds", r->seconds}};
        char line[640];
        std::snprintf(line, sizeof line, "[%s] %2d  %-52s %s", r->pass ? "PASS" : "FAIL", r->id,
                      r->name, r->detail);
        cx->out->record(j, line);
        return 0;
    };
    int failed = 0;
    check(pg_run_reproduction(zeros.c_str(), threads, gap_max, cramer_max, cb, &ctx, &failed),
          "report");
    std::cerr << (failed == 0 ? std::string("all criteria passed\n")
                              : std::to_string(failed) + " criteria FAILED\n");
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical audit toolkit for interval-prime bounds under RH"};
    app.require_subcommand(1);
    app.fallthrough();  // let --format / --threads appear after the subcommand

    std::string format = "text";
    app.add_option("--format", format, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads for zero sums")
        ->check(CLI::PositiveNumber);

    auto* sieve = app.add_subcommand("sieve", "classify a window and query Chebyshev sums");
    std::uint64_t s_lo = 2, s_hi = 100;
    std::vector<double> s_cheb;
    sieve->add_option("--lo", s_lo, "window start (>= 2)");
    sieve->add_option("--hi", s_hi, "window end")->required();
    sieve->add_option("--chebyshev", s_cheb, "evaluate psi/theta/psi1/pi at x (repeatable)");

    auto* za = app.add_subcommand("zeros-audit", "validate a zero table and audit its bounds");
    std::string za_zeros;
    std::uint64_t za_limit = 0;
    za->add_option("--zeros", za_zeros, "zero table path");
    za->add_option("--limit", za_limit, "use only the first N ordinates");

    auto* ex = app.add_subcommand("explicit", "evaluate a truncated explicit formula");
    std::string ex_zeros;
    double ex_x = 0;
    std::uint64_t ex_k = 0, ex_sieve_hi = 0;
    bool ex_psi1 = false;
    ex->add_option("--x", ex_x, "evaluation point (> 2)")->required();
    ex->add_option("--zeros", ex_zeros, "zero table path");
    ex->add_option("--k", ex_k, "number of zeros")->required();
    ex->add_flag("--psi1", ex_psi1, "evaluate the smoothed psi1 formula");
    ex->add_option("--sieve-hi", ex_sieve_hi, "compare against sieve truth up to this bound");

    auto* vg = app.add_subcommand("verify-gap", "verify the interval claim for a constant c");
    double vg_c = 0;
    std::uint64_t vg_xmax = 0;
    bool vg_maxgap = false;
    vg->add_option("--c", vg_c, "interval constant")->required();
    vg->add_option("--x-max", vg_xmax, "verify for all real x in [2, x_max]")->required();
    vg->add_flag("--max-gap", vg_maxgap, "also report the maximal normalized gap");

    auto* vc = app.add_subcommand(
        "verify-cramer", "prime-count check pi(x + c sqrt x log x) - pi(x) > sqrt x");
    double vc_c = 3.1, vc_x = 0;
    std::uint64_t vc_lo = 1000, vc_hi = 0;
    vc->add_option("--c", vc_c, "constant c")->required();
    vc->add_option("--x", vc_x, "single evaluation point");
    vc->add_option("--x-min", vc_lo, "scan start (integer)");
    vc->add_option("--x-max", vc_hi, "scan end (integer)");

    auto* sf = app.add_subcommand("schoenfeld", "psi - theta sandwich check");
    double sf_x = 0;
    std::uint64_t sf_lo = 121, sf_hi = 0;
    sf->add_option("--x", sf_x, "single evaluation point (>= 121)");
    sf->add_option("--x-min", sf_lo, "scan start");
    sf->add_option("--x-max", sf_hi, "scan end");

    auto* co = app.add_subcommand("constants", "alpha tradeoff and derived constants");
    double co_alpha = 0, co_eps = 0;
    bool co_min = false;
    co->add_option("--alpha", co_alpha, "report constants at this alpha");
    co->add_option("--eps", co_eps, "alpha needed for c <= 1/2 + eps");
    co->add_flag("--minimize", co_min, "minimize the asymptotic coefficient");

    auto* rp = app.add_subcommand("report", "run the full reproduction suite");
    std::string rp_zeros;
    std::uint64_t rp_gap_max = 0, rp_cramer_max = 0;
    rp->add_option("--zeros", rp_zeros, "zero table path");
    rp->add_option("--gap-max", rp_gap_max, "extended gap scan bound (default 1e7)");
    rp->add_option("--cramer-max", rp_cramer_max, "Cramer scan bound (default 1e7)");

    CLI11_PARSE(app, argc, argv);

    Out out;
    out.format = format == "json" ? Format::jsonl : format == "csv" ? Format::csv : Format::text;

    if (sieve->parsed()) return cmd_sieve(s_lo, s_hi, s_cheb, out);
    if (za->parsed()) return cmd_zeros_audit(default_zeros_path(za_zeros), za_limit, out);
    if (ex->parsed())
        return cmd_explicit(default_zeros_path(ex_zeros), ex_x, ex_k, ex_psi1, ex_sieve_hi,
                            threads, out);
    if (vg->parsed()) return cmd_verify_gap(vg_c, vg_xmax, vg_maxgap, out);
    if (vc->parsed()) {
        if (vc_x <= 0 && vc_hi == 0) {
            std::cerr << "error: verify-cramer needs --x or --x-min/--x-max\n";
            return 2;
        }
        return cmd_verify_cramer(vc_c, vc_x, vc_lo, vc_hi, out);
    }
    if (sf->parsed()) {
        if (sf_x <= 0 && sf_hi == 0) {
            std::cerr << "error: schoenfeld needs --x or --x-min/--x-max\n";
            return 2;
        }
        return cmd_schoenfeld(sf_x, sf_lo, sf_hi, out);
    }
    if (co->parsed()) {
        if (co_alpha <= 0 && co_eps <= 0 && !co_min) co_min = true;
        return cmd_constants(co_alpha, co_eps, co_min, out);
    }
    if (rp->parsed())
        return cmd_report(default_zeros_path(rp_zeros), threads, rp_gap_max, rp_cramer_max, out);
    return 2;
}
