#include "primegap/explicit_formula.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "primegap/summation.hpp"

namespace primegap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLog2Pi = 1.8378770664093454836;

// Schoenfeld (1976), eq. (6.2) under RH: |psi(x) - x| < sqrt(x) log^2 x/(8 pi)
// for x >= 73.2. Below that a direct sieve scan (tested) shows |psi - x| < 6.
double psi_deviation_bound(double x) {
    if (x >= 73.2) return std::sqrt(x) * std::log(x) * std::log(x) / (8.0 * kPi);
    return 6.0;
}

double small_terms_psi(double x) {
    return -kLog2Pi - 0.5 * std::log1p(-1.0 / (x * x));
}

}  // namespace

double zero_tail_sq_upper(const ZeroTable& table, double T) {
    if (T > 15.0) return tail_gamma_sq_bound(T);
    // Enumerate the table ordinates in (T, 15]; there is exactly one zero
    // below 15 and every validated table starts with it.
    double head = 0;
    for (double g : table.ordinates()) {
        if (g > 15.0) break;
        if (g > T) head += 1.0 / (g * g);
    }
    const double just_above_15 = std::nextafter(15.0, 16.0);
    return head + tail_gamma_sq_bound(just_above_15);
}

ExplicitEval psi_explicit(double x, const ZeroTable& table, std::size_t K,
                          unsigned threads) {
    if (!(x > 2)) throw std::invalid_argument("psi_explicit: x must exceed 2");
    if (K > table.count()) throw std::invalid_argument("psi_explicit: K exceeds table size");
    if (x == std::floor(x)) x += 0.5;  // Eq. (4) needs non-integral x

    ExplicitEval ev;
    ev.x = x;
    ev.zeros_used = K;
    ev.main_term = x;
    ev.small_terms = small_terms_psi(x);

    const double L = std::log(x);
    const double rx = std::sqrt(x);
    const auto& g = table.ordinates();
    // paired zero pair at gamma: 2 Re(x^rho / rho) with rho = 1/2 + i gamma
    ev.zero_sum = chunked_sum(K, [&](std::size_t i) {
        const double gamma = g[i];
        const double s = std::sin(gamma * L);
        const double c = std::cos(gamma * L);
        return 2.0 * rx * (0.5 * c + gamma * s) / (0.25 + gamma * gamma);
    }, threads);

    ev.value = ev.main_term - ev.zero_sum + ev.small_terms;
    // |omitted| <= |full zero sum| + |computed partial|; the full sum is
    // x - psi(x) + small_terms, bounded via the psi deviation estimate.
    ev.truncation_tail_bound =
        psi_deviation_bound(x) + std::abs(ev.small_terms) + std::abs(ev.zero_sum);
    return ev;
}

ExplicitEval psi1_explicit(double x, const ZeroTable& table, std::size_t K,
                           unsigned threads) {
    if (!(x > 2)) throw std::invalid_argument("psi1_explicit: x must exceed 2");
    if (K > table.count()) throw std::invalid_argument("psi1_explicit: K exceeds table size");

    ExplicitEval ev;
    ev.x = x;
    ev.zeros_used = K;
    ev.main_term = 0.5 * x * x;
    ev.small_terms = -x * kLog2Pi;

    const double L = std::log(x);
    const double x32 = x * std::sqrt(x);
    const auto& g = table.ordinates();
    // 2 Re(x^{rho+1} / (rho(rho+1))), rho(rho+1) = (3/4 - g^2) + 2ig,
    // |rho(rho+1)|^2 = (g^2 + 1/4)(g^2 + 9/4)
    ev.zero_sum = chunked_sum(K, [&](std::size_t i) {
        const double gamma = g[i];
        const double g2 = gamma * gamma;
        const double s = std::sin(gamma * L);
        const double c = std::cos(gamma * L);
        const double re = c * (0.75 - g2) + s * (2.0 * gamma);
        return 2.0 * x32 * re / ((g2 + 0.25) * (g2 + 2.25));
    }, threads);

    ev.value = ev.main_term - ev.zero_sum + ev.small_terms;
    const double T = (K > 0) ? g[K - 1] : 0.0;
    ev.truncation_tail_bound = 2.0 * x32 * zero_tail_sq_upper(table, T);
    return ev;
}

ResidualInterval residual_epsilon(double x, const ChebyshevOracle& oracle,
                                  const ZeroTable& table, std::size_t K,
                                  unsigned threads) {
    if (x > static_cast<double>(oracle.coverage()))
        throw std::out_of_range("residual_epsilon: sieve coverage insufficient");
    const ExplicitEval ev = psi1_explicit(x, table, K, threads);
    ResidualInterval r;
    r.center = oracle.psi1(x) - ev.value;
    r.half_width = ev.truncation_tail_bound;
    return r;
}

double weight_w(double n, double x, double h) {
    if (!(h > 0)) throw std::invalid_argument("weight_w: h must be positive");
    const double d = std::abs(n - x);
    return d < h ? 1.0 - d / h : 0.0;
}

double weighted_sum_direct(const ChebyshevOracle& oracle, double x, double h) {
    if (!(h > 0)) throw std::invalid_argument("weighted_sum_direct: h must be positive");
    if (x + h > static_cast<double>(oracle.coverage()))
        throw std::out_of_range("weighted_sum_direct: window beyond sieve coverage");
    const auto& pw = oracle.prime_powers();
    auto [b, e] = oracle.power_range(x - h, x + h);
    KahanSum s;
    for (std::size_t i = b; i < e; ++i)
        s.add(pw[i].log_p * weight_w(static_cast<double>(pw[i].n), x, h));
    return s.value();
}

double weighted_sum_via_psi1(const ChebyshevOracle& oracle, double x, double h) {
    if (!(h > 0)) throw std::invalid_argument("weighted_sum_via_psi1: h must be positive");
    if (x - h < 2)
        throw std::invalid_argument("weighted_sum_via_psi1: x - h must be >= 2");
    if (x + h > static_cast<double>(oracle.coverage()))
        throw std::out_of_range("weighted_sum_via_psi1: window beyond sieve coverage");
#if defined(__SIZEOF_FLOAT128__)
    // Form x +- h in binary128 so the Lambda-mass below the window cancels
    // exactly in the second difference.
    const __float128 xq = x, hq = h;
    const __float128 second_diff =
        oracle.psi1_quad(xq + hq) - 2 * oracle.psi1_quad(xq) + oracle.psi1_quad(xq - hq);
    return static_cast<double>(second_diff / hq);
#else
    return (oracle.psi1(x + h) - 2.0 * oracle.psi1(x) + oracle.psi1(x - h)) / h;
#endif
}

SigmaSplit sigma_exact(double x, double h, double alpha, const ZeroTable& table,
                       unsigned threads, bool tail_fallback) {
    if (!(h > 0) || !(h < x)) throw std::invalid_argument("sigma_exact: need 0 < h < x");
    if (!(alpha > 0)) throw std::invalid_argument("sigma_exact: alpha must be positive");

    SigmaSplit sp;
    sp.alpha = alpha;
    sp.cutoff = alpha * x / h;
    if (sp.cutoff > table.max_ordinate() && !tail_fallback)
        throw std::out_of_range("sigma_exact: zero table does not cover the cutoff");

    const auto& g = table.ordinates();
    const std::size_t k1 = sp.cutoff > table.max_ordinate()
                               ? table.count()
                               : table.count_below(sp.cutoff);

    const double lp = std::log(x + h), l0 = std::log(x), lm = std::log(x - h);
    const double ap = (x + h) * std::sqrt(x + h);
    const double a0 = x * std::sqrt(x);
    const double am = (x - h) * std::sqrt(x - h);

    auto paired = [&](std::size_t i) {
        const double gamma = g[i];
        const double g2 = gamma * gamma;
        // numerator (x+h)^{rho+1} - 2x^{rho+1} + (x-h)^{rho+1}, rho = 1/2+ig
        const double nre = ap * std::cos(gamma * lp) - 2.0 * a0 * std::cos(gamma * l0) +
                           am * std::cos(gamma * lm);
        const double nim = ap * std::sin(gamma * lp) - 2.0 * a0 * std::sin(gamma * l0) +
                           am * std::sin(gamma * lm);
        // denominator rho(rho+1) = (3/4 - g^2) + 2ig
        const double dre = 0.75 - g2;
        const double dim = 2.0 * gamma;
        return 2.0 * (nre * dre + nim * dim) / ((g2 + 0.25) * (g2 + 2.25));
    };

    sp.sigma1 = chunked_sum(k1, paired, threads);
    sp.sigma2_partial =
        chunked_sum(g.size() - k1, [&](std::size_t i) { return paired(k1 + i); }, threads);
    sp.sigma2_tail_bound = 8.0 * ap * zero_tail_sq_upper(table, table.max_ordinate());

    if (sp.cutoff > 15.0) {
        sp.sigma1_bound = sigma1_bound(x, h, alpha);
        sp.sigma2_bound = sigma2_bound(x, h, alpha);
    }
    return sp;
}

double sigma1_bound(double x, double h, double alpha) {
    if (!(h > 0) || !(h < x)) throw std::invalid_argument("sigma1_bound: need 0 < h < x");
    const double cutoff = alpha * x / h;
    if (!(cutoff > 15)) throw std::domain_error("sigma1_bound: cutoff must exceed 15");
    return alpha * x * h / (kPi * std::sqrt(x - h)) * std::log(cutoff);
}

double sigma2_bound(double x, double h, double alpha) {
    if (!(h > 0) || !(h < x)) throw std::invalid_argument("sigma2_bound: need 0 < h < x");
    const double cutoff = alpha * x / h;
    if (!(cutoff > 15)) throw std::domain_error("sigma2_bound: cutoff must exceed 15");
    return 4.0 * h * (x + h) * std::sqrt(x + h) / (kPi * alpha * x) * std::log(cutoff);
}

double lower_bound_psi_window(double x, double h, double alpha) {
    if (!(h > 0)) throw std::invalid_argument("lower_bound_psi_window: h must be positive");
    if (!(x - h >= 121))
        throw std::domain_error("lower_bound_psi_window: needs x - h >= 121");
    const double cutoff = alpha * x / h;
    if (!(cutoff > 15)) throw std::domain_error("lower_bound_psi_window: cutoff must exceed 15");

    const double log_cut = std::log(cutoff);
    const double zero_terms =
        (alpha * x / (kPi * std::sqrt(x - h)) +
         4.0 * (x + h) * std::sqrt(x + h) / (kPi * alpha * x)) * log_cut;
    const double prime_powers =
        1.11 * std::sqrt(x + h) + 3.0 * std::cbrt(x + h) - 0.98 * std::sqrt(x - h);
    return h - zero_terms - prime_powers - 48.0 / (5.0 * h);
}

}  // namespace primegap
