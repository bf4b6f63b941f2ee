// Compensated summation with a fixed reduction order.
//
// Every real accumulation in the library goes through one of these so that
// results are bit-identical across runs and across thread counts: chunk
// boundaries are fixed by index, each chunk is summed sequentially, and the
// chunk partials are combined in index order.

#pragma once

#include <cmath>
#include <cstddef>
#include <thread>
#include <vector>

namespace primegap {

// Kahan-Neumaier running sum. Error ~ 2 ulp of the true sum, independent of
// the number of terms.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline constexpr std::size_t kSumChunk = 4096;

// Sums f(i) for i in [0, n). Chunks of kSumChunk indices are farmed out to
// `threads` workers; each chunk is Kahan-summed in index order and the chunk
// partials are combined in index order, so the result does not depend on the
// thread count.
template <typename F>
double chunked_sum(std::size_t n, F&& f, unsigned threads = 1) {
    if (n == 0) return 0.0;
    const std::size_t nchunks = (n + kSumChunk - 1) / kSumChunk;
    std::vector<double> partial(nchunks);

    auto run_chunk = [&](std::size_t c) {
        const std::size_t lo = c * kSumChunk;
        const std::size_t hi = lo + kSumChunk < n ? lo + kSumChunk : n;
        KahanSum s;
        for (std::size_t i = lo; i < hi; ++i) s.add(f(i));
        partial[c] = s.value();
    };

    if (threads <= 1 || nchunks == 1) {
        for (std::size_t c = 0; c < nchunks; ++c) run_chunk(c);
    } else {
        const unsigned nw = threads < nchunks ? threads : static_cast<unsigned>(nchunks);
        std::vector<std::thread> pool;
        pool.reserve(nw);
        for (unsigned w = 0; w < nw; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t c = w; c < nchunks; c += nw) run_chunk(c);
            });
        }
        for (auto& t : pool) t.join();
    }

    KahanSum total;
    for (double p : partial) total.add(p);
    return total.value();
}

}  // namespace primegap
