#include "primegap/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "primegap/summation.hpp"

namespace primegap {

namespace {

// Simple sieve for the base primes up to n (inclusive).
std::vector<std::uint64_t> base_primes(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (comp[p]) continue;
        out.push_back(p);
        for (std::uint64_t q = p * p; q <= n; q += p) comp[q] = true;
    }
    return out;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

bool PrimeWindow::is_prime(std::uint64_t n) const {
    if (n < lo_ || n > hi_) return false;
    if (n == 2) return true;
    if (n % 2 == 0) return false;
    const std::uint64_t idx = (n - first_odd_) / 2;
    return (odd_bits_[idx >> 6] >> (idx & 63)) & 1u;
}

std::vector<std::uint64_t> PrimeWindow::primes() const {
    std::vector<std::uint64_t> out;
    for (const auto& pp : powers_)
        if (pp.power == 1) out.push_back(pp.n);
    return out;
}

std::optional<std::uint64_t> PrimeWindow::prev_prime_in_window(double x) const {
    if (x < static_cast<double>(lo_)) return std::nullopt;
    auto n = static_cast<std::uint64_t>(std::min(x, static_cast<double>(hi_)));
    for (; n >= lo_; --n) {
        if (is_prime(n)) return n;
        if (n == lo_) break;
    }
    return std::nullopt;
}

std::optional<std::uint64_t> PrimeWindow::next_prime_in_window(double x) const {
    std::uint64_t n = lo_;
    if (x >= static_cast<double>(lo_)) {
        // "greater than x" is strict, so start at floor(x) + 1.
        const auto fl = static_cast<std::uint64_t>(std::floor(x));
        if (fl >= hi_) return std::nullopt;
        n = fl + 1;
    }
    for (; n <= hi_; ++n)
        if (is_prime(n)) return n;
    return std::nullopt;
}

PrimeWindow sieve_window(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opts) {
    if (lo < 2) throw std::invalid_argument("sieve_window: lo must be >= 2");
    if (hi < lo) throw std::invalid_argument("sieve_window: hi < lo");
    if (hi - lo >= opts.max_span)
        throw std::length_error("sieve_window: range exceeds the configured budget");

    PrimeWindow w;
    w.lo_ = lo;
    w.hi_ = hi;
    w.first_odd_ = (lo % 2 == 0) ? lo + 1 : lo;

    const std::uint64_t root = isqrt_u64(hi);
    const auto bases = base_primes(root);

    const std::uint64_t n_odd = (hi >= w.first_odd_) ? (hi - w.first_odd_) / 2 + 1 : 0;
    w.odd_bits_.assign((n_odd + 63) / 64, ~std::uint64_t{0});

    auto clear_bit = [&](std::uint64_t idx) { w.odd_bits_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63)); };

    const std::uint64_t seg = std::max<std::uint64_t>(opts.segment_size, 64);
    for (std::uint64_t seg_lo = w.first_odd_; seg_lo <= hi && n_odd > 0; seg_lo += seg) {
        const std::uint64_t seg_hi = std::min(hi, seg_lo + seg - 1);
        for (std::uint64_t p : bases) {
            if (p == 2) continue;
            if (p * p > seg_hi) break;
            // first odd multiple of p in [max(seg_lo, p*p), seg_hi]
            std::uint64_t start = std::max(p * p, (seg_lo + p - 1) / p * p);
            if (start % 2 == 0) start += p;
            for (std::uint64_t m = start; m <= seg_hi; m += 2 * p)
                clear_bit((m - w.first_odd_) / 2);
        }
    }
    // Prime powers, ascending. Primes first from the bitset, then p^m (m >= 2)
    // for base primes, merged by value.
    std::vector<PrimePower> highers;
    for (std::uint64_t p : bases) {
        const double lp = std::log(static_cast<double>(p));
        // p^m <= hi, m >= 2, p^m >= lo
        std::uint64_t pm = p * p;
        std::uint32_t m = 2;
        while (pm <= hi) {
            if (pm >= lo) highers.push_back({pm, lp, m});
            if (pm > hi / p) break;
            pm *= p;
            ++m;
        }
    }
    std::sort(highers.begin(), highers.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.n < b.n; });

    auto hit = highers.begin();
    auto push_prime = [&](std::uint64_t p) {
        while (hit != highers.end() && hit->n < p) w.powers_.push_back(*hit++);
        w.powers_.push_back({p, std::log(static_cast<double>(p)), 1});
    };
    if (lo <= 2 && hi >= 2) push_prime(2);
    for (std::uint64_t i = 0; i < n_odd; ++i) {
        if ((w.odd_bits_[i >> 6] >> (i & 63)) & 1u) push_prime(w.first_odd_ + 2 * i);
    }
    while (hit != highers.end()) w.powers_.push_back(*hit++);

    return w;
}

ChebyshevOracle::ChebyshevOracle(PrimeWindow window) : window_(std::move(window)) {
    if (window_.lo() != 2)
        throw std::invalid_argument("ChebyshevOracle: window must start at 2");
    primes_ = window_.primes();
}

std::pair<std::size_t, std::size_t> ChebyshevOracle::power_range(double a, double b) const {
    const auto& pw = window_.prime_powers();
    auto lo = std::upper_bound(pw.begin(), pw.end(), a,
                               [](double v, const PrimePower& p) { return v < static_cast<double>(p.n); });
    auto hi = std::upper_bound(pw.begin(), pw.end(), b,
                               [](double v, const PrimePower& p) { return v < static_cast<double>(p.n); });
    return {static_cast<std::size_t>(lo - pw.begin()), static_cast<std::size_t>(hi - pw.begin())};
}

double ChebyshevOracle::psi(double x) const {
    if (x < 2) throw std::invalid_argument("psi: x must be >= 2");
    if (x > static_cast<double>(coverage())) throw std::out_of_range("psi: x beyond sieve coverage");
    const auto& pw = window_.prime_powers();
    auto [b, e] = power_range(0.0, x);
    (void)b;
    KahanSum s;
    for (std::size_t i = 0; i < e; ++i) s.add(pw[i].log_p);
    return s.value();
}

double ChebyshevOracle::theta(double x) const {
    if (x < 2) throw std::invalid_argument("theta: x must be >= 2");
    if (x > static_cast<double>(coverage())) throw std::out_of_range("theta: x beyond sieve coverage");
    const auto& pw = window_.prime_powers();
    auto [b, e] = power_range(0.0, x);
    (void)b;
    KahanSum s;
    for (std::size_t i = 0; i < e; ++i)
        if (pw[i].power == 1) s.add(pw[i].log_p);
    return s.value();
}

double ChebyshevOracle::psi1(double x) const {
#if defined(__SIZEOF_FLOAT128__)
    return static_cast<double>(psi1_quad(x));
#else
    if (x < 2) throw std::invalid_argument("psi1: x must be >= 2");
    if (x > static_cast<double>(coverage())) throw std::out_of_range("psi1: x beyond sieve coverage");
    const auto& pw = window_.prime_powers();
    auto [b, e] = power_range(0.0, x);
    (void)b;
    KahanSum s;
    for (std::size_t i = 0; i < e; ++i)
        s.add((x - static_cast<double>(pw[i].n)) * pw[i].log_p);
    return s.value();
#endif
}

#if defined(__SIZEOF_FLOAT128__)
__float128 ChebyshevOracle::psi1_quad(__float128 x) const {
    const double xd = static_cast<double>(x);
    if (xd < 2) throw std::invalid_argument("psi1: x must be >= 2");
    if (xd > static_cast<double>(coverage()))
        throw std::out_of_range("psi1: x beyond sieve coverage");
    const auto& pw = window_.prime_powers();
    // Over-approximate the index range, then gate each entry on the exact x.
    auto [b, e] = power_range(0.0, xd + 1.0);
    (void)b;
    __float128 s = 0;
    for (std::size_t i = 0; i < e; ++i) {
        const __float128 nq = static_cast<__float128>(pw[i].n);
        if (nq <= x) s += (x - nq) * static_cast<__float128>(pw[i].log_p);
    }
    return s;
}
#endif

std::uint64_t ChebyshevOracle::prime_count(double x) const {
    if (x < 0) return 0;
    if (x > static_cast<double>(coverage())) throw std::out_of_range("pi: x beyond sieve coverage");
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x,
                               [](double v, std::uint64_t p) { return v < static_cast<double>(p); });
    return static_cast<std::uint64_t>(it - primes_.begin());
}

ChebyshevValues ChebyshevOracle::chebyshev(double x) const {
    ChebyshevValues v;
    v.x = x;
    v.psi = psi(x);
    v.theta = theta(x);
    v.psi1 = psi1(x);
    v.pi = prime_count(x);
    return v;
}

std::uint64_t ChebyshevOracle::prev_prime(double x) const {
    if (x < 2) throw std::invalid_argument("prev_prime: x must be >= 2");
    auto p = window_.prev_prime_in_window(std::min(x, static_cast<double>(coverage())));
    if (!p || static_cast<double>(x) > static_cast<double>(coverage()))
        throw std::out_of_range("prev_prime: x beyond sieve coverage");
    return *p;
}

std::uint64_t ChebyshevOracle::next_prime(double x) const {
    if (x < 0) throw std::invalid_argument("next_prime: x must be >= 0");
    if (x < 2) return 2;
    auto p = window_.next_prime_in_window(x);
    if (!p) throw std::out_of_range("next_prime: answer beyond sieve coverage");
    return *p;
}

}  // namespace primegap
