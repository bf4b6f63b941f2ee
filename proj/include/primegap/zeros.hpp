// Tables of nontrivial zeta-zero ordinates and the zero-count / tail-sum
// bounds built on them.
//
// The table stores only the positive ordinates gamma (RH is assumed, so every
// zero is 1/2 + i*gamma and formulas pair +/-gamma). Tables are validated on
// load -- strictly ascending, all above 14, first entry anchored at 14.1347 --
// and immutable afterwards; queries are read-only and thread-safe.
//
// The library never computes zeros; see tools/fetch_zeros.py for producing
// table files.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace primegap {

class ZeroTable {
public:
    ZeroTable(std::vector<double> ordinates, std::string digest);

    std::size_t count() const { return ordinates_.size(); }
    double max_ordinate() const { return ordinates_.back(); }
    double ordinate(std::size_t k) const { return ordinates_[k]; }  // 0-based
    const std::vector<double>& ordinates() const { return ordinates_; }
    const std::string& source_digest() const { return digest_; }

    // Number of ordinates strictly below T; requires 0 < T <= max_ordinate.
    std::size_t count_below(double T) const;

private:
    std::vector<double> ordinates_;
    std::string digest_;
};

// Parses a table file: one decimal ordinate per line, ascending, '#' starts a
// comment line, blank lines ignored. Keeps at most `limit` entries when given.
// Throws std::runtime_error with the offending line number on parse or
// monotonicity failures, and on an empty table.
ZeroTable load_zeros(const std::string& path, std::optional<std::size_t> limit = std::nullopt);

// Zero-count upper bound N(T) < T log T / (2 pi), valid for T > 15.
double nt_bound(double T);

// Tail bound: sum over ordinates gamma > T of 1/gamma^2 is at most
// log T / (2 pi T), valid for T > 15. (This is the form forced by the
// Sigma_2 chain; it is audited against table data in the tests.)
double tail_gamma_sq_bound(double T);

struct InvRhoSqSum {
    double partial = 0;     // 2 * sum over table ordinates of 1/(1/4 + gamma^2)
    double tail_bound = 0;  // rigorous bound on the contribution beyond the table
    double lower() const { return partial; }
    double upper() const { return partial + tail_bound; }
};

// Partial sum of 1/|rho|^2 over all zeros, paired as 2/(1/4 + gamma^2), plus
// a rigorous tail bound for the zeros beyond the table.
InvRhoSqSum sum_inv_rho_sq(const ZeroTable& table);

}  // namespace primegap
