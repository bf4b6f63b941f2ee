// Exact prime / von Mangoldt machinery over integer windows.
//
// A PrimeWindow is a fully classified range [lo, hi]: a primality bitset
// (odd numbers only, 2 special-cased) plus the list of prime powers n = p^m
// in the range with their von Mangoldt values log p. Windows are immutable
// after construction and safe to share across threads.
//
// ChebyshevOracle wraps a window starting at 2 and answers the summatory
// queries psi, theta, psi1, pi plus neighbor-prime lookups. psi1 is summed
// directly from its defining sum (x-n)*Lambda(n); the integral identity
// psi1 = int_2^x psi is a test, not the implementation.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace primegap {

struct SieveOptions {
    // Integers per sieving segment. Power of two keeps segment edges aligned.
    std::uint64_t segment_size = std::uint64_t{1} << 20;
    // Hard cap on hi - lo. Guards against accidentally sieving into swap.
    std::uint64_t max_span = std::uint64_t{1} << 31;
};

struct PrimePower {
    std::uint64_t n;      // p^m
    double log_p;         // Lambda(n)
    std::uint32_t power;  // m (1 for the prime itself)
};

class PrimeWindow {
public:
    std::uint64_t lo() const { return lo_; }
    std::uint64_t hi() const { return hi_; }

    bool is_prime(std::uint64_t n) const;

    // All n in [lo, hi] with Lambda(n) > 0, ascending (primes included).
    const std::vector<PrimePower>& prime_powers() const { return powers_; }

    std::vector<std::uint64_t> primes() const;

    // Largest prime <= x inside the window, if any.
    std::optional<std::uint64_t> prev_prime_in_window(double x) const;
    // Smallest prime > x inside the window, if any.
    std::optional<std::uint64_t> next_prime_in_window(double x) const;

private:
    friend PrimeWindow sieve_window(std::uint64_t, std::uint64_t, const SieveOptions&);

    std::uint64_t lo_ = 0;
    std::uint64_t hi_ = 0;
    std::vector<std::uint64_t> odd_bits_;  // bit i <=> first_odd + 2i is prime
    std::uint64_t first_odd_ = 0;
    std::vector<PrimePower> powers_;
};

// Sieves [lo, hi], 2 <= lo <= hi. Throws std::invalid_argument on a bad range
// and std::length_error when the span exceeds the budget.
PrimeWindow sieve_window(std::uint64_t lo, std::uint64_t hi,
                         const SieveOptions& opts = {});

struct ChebyshevValues {
    double x = 0;
    double psi = 0;    // sum of Lambda(n), n <= x
    double theta = 0;  // sum of log p, primes p <= x
    double psi1 = 0;   // sum of (x - n) Lambda(n), n <= x
    std::uint64_t pi = 0;
};

class ChebyshevOracle {
public:
    // The window must start at 2.
    explicit ChebyshevOracle(PrimeWindow window);

    std::uint64_t coverage() const { return window_.hi(); }
    const PrimeWindow& window() const { return window_; }

    // Exact sums over the sieved data; requires 2 <= x <= coverage().
    ChebyshevValues chebyshev(double x) const;

    double psi(double x) const;
    double theta(double x) const;
    double psi1(double x) const;
#if defined(__SIZEOF_FLOAT128__)
    // psi1 accumulated in binary128 at a binary128 evaluation point; the
    // second-difference identity in explicit_formula cancels x^2/2-sized
    // terms down to ~h^2, and the x +- h points themselves must be formed
    // without double rounding or the cancellation leaves a residue.
    __float128 psi1_quad(__float128 x) const;
#endif
    std::uint64_t prime_count(double x) const;  // pi(x)

    // Largest prime <= x (x >= 2) / smallest prime > x (x >= 0). Throw
    // std::out_of_range when the answer is not determined by the window.
    std::uint64_t prev_prime(double x) const;
    std::uint64_t next_prime(double x) const;

    // Prime powers n with a < n <= b, as index range into prime_powers().
    std::pair<std::size_t, std::size_t> power_range(double a, double b) const;
    const std::vector<PrimePower>& prime_powers() const { return window_.prime_powers(); }
    const std::vector<std::uint64_t>& primes() const { return primes_; }

private:
    PrimeWindow window_;
    std::vector<std::uint64_t> primes_;
};

}  // namespace primegap
