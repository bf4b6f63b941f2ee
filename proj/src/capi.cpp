#include "primegap.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <stdexcept>
#include <string>

#include "primegap/constants.hpp"
#include "primegap/explicit_formula.hpp"
#include "primegap/gap_verify.hpp"
#include "primegap/report.hpp"
#include "primegap/sieve.hpp"
#include "primegap/zeros.hpp"

namespace {

thread_local std::string g_last_error;

pg_status set_error(pg_status code, const char* what) {
    g_last_error = what ? what : "unknown error";
    return code;
}

// Translates the core's exception idiom into status codes.
template <typename F>
pg_status guarded(F&& f) {
    try {
        f();
        return PG_OK;
    } catch (const std::domain_error& e) {
        return set_error(PG_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(PG_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::length_error& e) {
        return set_error(PG_ERR_BUDGET, e.what());
    } catch (const std::out_of_range& e) {
        return set_error(PG_ERR_COVERAGE, e.what());
    } catch (const std::runtime_error& e) {
        return set_error(PG_ERR_PARSE, e.what());
    } catch (const std::bad_alloc& e) {
        return set_error(PG_ERR_BUDGET, e.what());
    } catch (const std::exception& e) {
        return set_error(PG_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(PG_ERR_INTERNAL, "unknown exception");
    }
}

pg_status require(bool ok, const char* what) {
    return ok ? PG_OK : set_error(PG_ERR_INVALID_ARGUMENT, what);
}

pg_explicit_eval to_c_eval(const primegap::ExplicitEval& ev) {
    return {ev.x,        ev.zeros_used,  ev.main_term,
            ev.zero_sum, ev.small_terms, ev.value,
            ev.truncation_tail_bound};
}

pg_gap_certificate to_c_cert(const primegap::GapCertificate& c) {
    return {c.p_lo, c.p_hi, c.gap, c.normalized,
            c.passes_4_over_pi ? 1 : 0, c.passes_8_over_5 ? 1 : 0};
}

}  // namespace

struct pg_sieve {
    primegap::ChebyshevOracle oracle;
};

struct pg_zeros {
    primegap::ZeroTable table;
};

extern "C" {

const char* pg_last_error(void) { return g_last_error.c_str(); }

const char* pg_version(void) { return "primegap 1.0.0"; }

/* ---------------- sieve ---------------- */

pg_status pg_sieve_create(uint64_t hi, pg_sieve** out) {
    if (pg_status st = require(out != nullptr, "pg_sieve_create: out is null")) return st;
    *out = nullptr;
    return guarded([&] {
        *out = new pg_sieve{primegap::ChebyshevOracle(primegap::sieve_window(2, hi))};
    });
}

void pg_sieve_free(pg_sieve* s) { delete s; }

uint64_t pg_sieve_coverage(const pg_sieve* s) { return s ? s->oracle.coverage() : 0; }

int pg_sieve_is_prime(const pg_sieve* s, uint64_t n) {
    return s && s->oracle.window().is_prime(n) ? 1 : 0;
}

pg_status pg_sieve_chebyshev(const pg_sieve* s, double x, pg_chebyshev_values* out) {
    if (pg_status st = require(s && out, "pg_sieve_chebyshev: null argument")) return st;
    return guarded([&] {
        const auto v = s->oracle.chebyshev(x);
        *out = {v.x, v.psi, v.theta, v.psi1, v.pi};
    });
}

pg_status pg_sieve_prev_prime(const pg_sieve* s, double x, uint64_t* out) {
    if (pg_status st = require(s && out, "pg_sieve_prev_prime: null argument")) return st;
    return guarded([&] { *out = s->oracle.prev_prime(x); });
}

pg_status pg_sieve_next_prime(const pg_sieve* s, double x, uint64_t* out) {
    if (pg_status st = require(s && out, "pg_sieve_next_prime: null argument")) return st;
    return guarded([&] { *out = s->oracle.next_prime(x); });
}

pg_status pg_sieve_window_powers(const pg_sieve* s, uint64_t lo, uint64_t hi,
                                 pg_prime_power_cb cb, void* user) {
    if (pg_status st = require(s && cb, "pg_sieve_window_powers: null argument")) return st;
    return guarded([&] {
        if (hi > s->oracle.coverage())
            throw std::out_of_range("pg_sieve_window_powers: hi beyond sieve coverage");
        auto [b, e] = s->oracle.power_range(static_cast<double>(lo) - 0.5,
                                            static_cast<double>(hi) + 0.5);
        const auto& pw = s->oracle.prime_powers();
        for (std::size_t i = b; i < e; ++i) {
            pg_prime_power rec{pw[i].n, pw[i].log_p, pw[i].power};
            if (cb(&rec, user) != 0) break;
        }
    });
}

/* ---------------- zero tables ---------------- */

pg_status pg_zeros_load(const char* path, uint64_t limit, pg_zeros** out) {
    if (pg_status st = require(path && out, "pg_zeros_load: null argument")) return st;
    *out = nullptr;
    return guarded([&] {
        std::optional<std::size_t> lim;
        if (limit > 0) lim = static_cast<std::size_t>(limit);
        *out = new pg_zeros{primegap::load_zeros(path, lim)};
    });
}

void pg_zeros_free(pg_zeros* z) { delete z; }

uint64_t pg_zeros_count(const pg_zeros* z) { return z ? z->table.count() : 0; }

double pg_zeros_max_ordinate(const pg_zeros* z) {
    return z ? z->table.max_ordinate() : std::numeric_limits<double>::quiet_NaN();
}

double pg_zeros_ordinate(const pg_zeros* z, uint64_t k) {
    if (!z || k >= z->table.count()) return std::numeric_limits<double>::quiet_NaN();
    return z->table.ordinate(static_cast<std::size_t>(k));
}

const char* pg_zeros_digest(const pg_zeros* z) {
    return z ? z->table.source_digest().c_str() : "";
}

pg_status pg_zeros_count_below(const pg_zeros* z, double T, uint64_t* out) {
    if (pg_status st = require(z && out, "pg_zeros_count_below: null argument")) return st;
    return guarded([&] { *out = z->table.count_below(T); });
}

pg_status pg_nt_bound(double T, double* out) {
    if (pg_status st = require(out != nullptr, "pg_nt_bound: out is null")) return st;
    return guarded([&] { *out = primegap::nt_bound(T); });
}

pg_status pg_tail_gamma_sq_bound(double T, double* out) {
    if (pg_status st = require(out != nullptr, "pg_tail_gamma_sq_bound: out is null")) return st;
    return guarded([&] { *out = primegap::tail_gamma_sq_bound(T); });
}

pg_status pg_sum_inv_rho_sq(const pg_zeros* z, double* partial, double* tail_bound) {
    if (pg_status st = require(z && partial && tail_bound, "pg_sum_inv_rho_sq: null argument")) return st;
    return guarded([&] {
        const auto s = primegap::sum_inv_rho_sq(z->table);
        *partial = s.partial;
        *tail_bound = s.tail_bound;
    });
}

/* ---------------- explicit formulas ---------------- */

pg_status pg_psi_explicit(const pg_zeros* z, double x, uint64_t k, unsigned threads,
                          pg_explicit_eval* out) {
    if (pg_status st = require(z && out, "pg_psi_explicit: null argument")) return st;
    return guarded([&] {
        *out = to_c_eval(primegap::psi_explicit(x, z->table, static_cast<std::size_t>(k), threads));
    });
}

pg_status pg_psi1_explicit(const pg_zeros* z, double x, uint64_t k, unsigned threads,
                           pg_explicit_eval* out) {
    if (pg_status st = require(z && out, "pg_psi1_explicit: null argument")) return st;
    return guarded([&] {
        *out = to_c_eval(primegap::psi1_explicit(x, z->table, static_cast<std::size_t>(k), threads));
    });
}

pg_status pg_residual_epsilon(const pg_sieve* s, const pg_zeros* z, double x, uint64_t k,
                              unsigned threads, double* center, double* half_width) {
    if (pg_status st = require(s && z && center && half_width, "pg_residual_epsilon: null argument"))
        return st;
    return guarded([&] {
        const auto r = primegap::residual_epsilon(x, s->oracle, z->table,
                                                  static_cast<std::size_t>(k), threads);
        *center = r.center;
        *half_width = r.half_width;
    });
}

pg_status pg_weight_w(double n, double x, double h, double* out) {
    if (pg_status st = require(out != nullptr, "pg_weight_w: out is null")) return st;
    return guarded([&] { *out = primegap::weight_w(n, x, h); });
}

pg_status pg_weighted_sum_direct(const pg_sieve* s, double x, double h, double* out) {
    if (pg_status st = require(s && out, "pg_weighted_sum_direct: null argument")) return st;
    return guarded([&] { *out = primegap::weighted_sum_direct(s->oracle, x, h); });
}

pg_status pg_weighted_sum_via_psi1(const pg_sieve* s, double x, double h, double* out) {
    if (pg_status st = require(s && out, "pg_weighted_sum_via_psi1: null argument")) return st;
    return guarded([&] { *out = primegap::weighted_sum_via_psi1(s->oracle, x, h); });
}

pg_status pg_sigma_exact(const pg_zeros* z, double x, double h, double alpha,
                         unsigned threads, pg_sigma_split* out) {
    if (pg_status st = require(z && out, "pg_sigma_exact: null argument")) return st;
    return guarded([&] {
        const auto sp = primegap::sigma_exact(x, h, alpha, z->table, threads);
        out->alpha = sp.alpha;
        out->cutoff = sp.cutoff;
        out->sigma1 = sp.sigma1;
        out->sigma2_partial = sp.sigma2_partial;
        out->sigma2_tail_bound = sp.sigma2_tail_bound;
        out->has_bounds = sp.sigma1_bound.has_value() ? 1 : 0;
        out->sigma1_bound = sp.sigma1_bound.value_or(std::numeric_limits<double>::quiet_NaN());
        out->sigma2_bound = sp.sigma2_bound.value_or(std::numeric_limits<double>::quiet_NaN());
    });
}

pg_status pg_sigma1_bound(double x, double h, double alpha, double* out) {
    if (pg_status st = require(out != nullptr, "pg_sigma1_bound: out is null")) return st;
    return guarded([&] { *out = primegap::sigma1_bound(x, h, alpha); });
}

pg_status pg_sigma2_bound(double x, double h, double alpha, double* out) {
    if (pg_status st = require(out != nullptr, "pg_sigma2_bound: out is null")) return st;
    return guarded([&] { *out = primegap::sigma2_bound(x, h, alpha); });
}

pg_status pg_lower_bound_psi_window(double x, double h, double alpha, double* out) {
    if (pg_status st = require(out != nullptr, "pg_lower_bound_psi_window: out is null")) return st;
    return guarded([&] { *out = primegap::lower_bound_psi_window(x, h, alpha); });
}

/* ---------------- gap verification ---------------- */

pg_status pg_verify_interval_claim(const pg_sieve* s, double c, uint64_t x_max,
                                   pg_gap_failure_cb cb, void* user, uint64_t* n_failures,
                                   uint64_t* pairs_checked) {
    if (pg_status st = require(s && n_failures, "pg_verify_interval_claim: null argument")) return st;
    return guarded([&] {
        const auto res = primegap::verify_interval_claim(s->oracle, c, x_max);
        *n_failures = res.failures.size();
        if (pairs_checked) *pairs_checked = res.pairs_checked;
        if (cb) {
            for (const auto& f : res.failures) {
                const auto rec = to_c_cert(f);
                if (cb(&rec, user) != 0) break;
            }
        }
    });
}

pg_status pg_max_normalized_gap(const pg_sieve* s, uint64_t x_max, pg_gap_certificate* cert,
                                double* d_max) {
    if (pg_status st = require(s && cert && d_max, "pg_max_normalized_gap: null argument")) return st;
    return guarded([&] {
        const auto mg = primegap::max_normalized_gap(s->oracle, x_max);
        *cert = to_c_cert(mg.certificate);
        *d_max = mg.d_max;
    });
}

pg_status pg_cramer_count_check(const pg_sieve* s, double x, double c, uint64_t* count,
                                double* threshold, int* pass) {
    if (pg_status st = require(s && count && threshold && pass, "pg_cramer_count_check: null argument"))
        return st;
    return guarded([&] {
        const auto r = primegap::cramer_count_check(s->oracle, x, c);
        *count = r.count;
        *threshold = r.threshold;
        *pass = r.pass ? 1 : 0;
    });
}

pg_status pg_cramer_scan(const pg_sieve* s, uint64_t x_lo, uint64_t x_hi, double c,
                         pg_cramer_scan_result* out) {
    if (pg_status st = require(s && out, "pg_cramer_scan: null argument")) return st;
    return guarded([&] {
        const auto r = primegap::cramer_scan(s->oracle, x_lo, x_hi, c);
        *out = {r.all_pass ? 1 : 0, r.checked, r.worst_x, r.worst_margin, r.failures};
    });
}

pg_status pg_schoenfeld_check(const pg_sieve* s, double x, int* lower_ok, int* upper_ok,
                              double* diff) {
    if (pg_status st = require(s && lower_ok && upper_ok && diff, "pg_schoenfeld_check: null argument"))
        return st;
    return guarded([&] {
        const auto r = primegap::schoenfeld_check(s->oracle, x);
        *lower_ok = r.lower_ok ? 1 : 0;
        *upper_ok = r.upper_ok ? 1 : 0;
        *diff = r.diff;
    });
}

pg_status pg_schoenfeld_scan(const pg_sieve* s, uint64_t x_lo, uint64_t x_hi,
                             pg_schoenfeld_scan_result* out) {
    if (pg_status st = require(s && out, "pg_schoenfeld_scan: null argument")) return st;
    return guarded([&] {
        const auto r = primegap::schoenfeld_scan(s->oracle, x_lo, x_hi);
        *out = {r.all_lower_ok ? 1 : 0, r.all_upper_ok ? 1 : 0, r.checked,
                r.worst_lower_x,        r.worst_lower_margin,   r.worst_upper_x,
                r.worst_upper_margin};
    });
}

/* ---------------- constants ---------------- */

pg_status pg_asymptotic_coefficient(double alpha, double* out) {
    if (pg_status st = require(out != nullptr, "pg_asymptotic_coefficient: out is null")) return st;
    return guarded([&] { *out = primegap::asymptotic_coefficient(alpha); });
}

pg_status pg_minimize_asymptotic(double lo, double hi, double* alpha_star, double* value) {
    if (pg_status st = require(alpha_star && value, "pg_minimize_asymptotic: null argument")) return st;
    return guarded([&] {
        const auto [a, v] = (lo == 0 && hi == 0) ? primegap::minimize_asymptotic()
                                                 : primegap::minimize_asymptotic(lo, hi);
        *alpha_star = a;
        *value = v;
    });
}

pg_status pg_sinc2_integral(double a, double* value, double* error_estimate) {
    if (pg_status st = require(value && error_estimate, "pg_sinc2_integral: null argument")) return st;
    return guarded([&] {
        const auto r = primegap::sinc2_integral(a);
        *value = r.value;
        *error_estimate = r.error_estimate;
    });
}

pg_status pg_c_alpha(double alpha, double* out) {
    if (pg_status st = require(out != nullptr, "pg_c_alpha: out is null")) return st;
    return guarded([&] { *out = primegap::c_alpha(alpha); });
}

pg_status pg_theorem2_constant(double alpha, double* out) {
    if (pg_status st = require(out != nullptr, "pg_theorem2_constant: out is null")) return st;
    return guarded([&] { *out = primegap::theorem2_constant(alpha); });
}

pg_status pg_cramer_constant(double alpha, double* out) {
    if (pg_status st = require(out != nullptr, "pg_cramer_constant: out is null")) return st;
    return guarded([&] { *out = primegap::cramer_constant(alpha); });
}

pg_status pg_alpha_for_epsilon(double eps, double* out) {
    if (pg_status st = require(out != nullptr, "pg_alpha_for_epsilon: out is null")) return st;
    return guarded([&] { *out = primegap::alpha_for_epsilon(eps); });
}

pg_status pg_constant_report_run(double alpha, pg_constant_report* out) {
    if (pg_status st = require(out != nullptr, "pg_constant_report_run: out is null")) return st;
    return guarded([&] {
        const auto r = primegap::constant_report(alpha);
        *out = {r.alpha,  r.integral_value,    r.quadrature_error_estimate,
                r.c_alpha, r.theorem2_constant, r.cramer_constant};
    });
}

/* ---------------- reproduction suite ---------------- */

pg_status pg_run_reproduction(const char* zeros_path, unsigned threads, uint64_t gap_scan_max,
                              uint64_t cramer_scan_max, pg_criterion_cb cb, void* user,
                              int* n_failed) {
    if (pg_status st = require(zeros_path && n_failed, "pg_run_reproduction: null argument")) return st;
    return guarded([&] {
        primegap::ReproductionConfig cfg;
        cfg.zeros_path = zeros_path;
        cfg.threads = threads ? threads : 1;
        if (gap_scan_max) cfg.gap_scan_max = gap_scan_max;
        if (cramer_scan_max) cfg.cramer_scan_max = cramer_scan_max;
        const auto results = primegap::run_reproduction(cfg);
        int failed = 0;
        for (const auto& r : results) {
            if (!r.pass) ++failed;
            if (cb) {
                pg_criterion_result rec{};
                rec.id = r.id;
                rec.pass = r.pass ? 1 : 0;
                std::strncpy(rec.name, r.name.c_str(), sizeof rec.name - 1);
                std::strncpy(rec.detail, r.detail.c_str(), sizeof rec.detail - 1);
                rec.seconds = r.seconds;
                if (cb(&rec, user) != 0) break;
            }
        }
        *n_failed = failed;
    });
}

} /* extern "C" */
