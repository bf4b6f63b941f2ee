#include "primegap/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "primegap/summation.hpp"

namespace primegap {

namespace {

constexpr double kFirstOrdinate = 14.1347;
constexpr double kFirstOrdinateTol = 1e-3;

// FNV-1a over the raw file bytes; enough to detect swapped or edited tables.
std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

ZeroTable::ZeroTable(std::vector<double> ordinates, std::string digest)
    : ordinates_(std::move(ordinates)), digest_(std::move(digest)) {
    if (ordinates_.empty()) throw std::runtime_error("zero table: empty table");
    double prev = 14.0;
    for (std::size_t i = 0; i < ordinates_.size(); ++i) {
        if (!(ordinates_[i] > prev))
            throw std::runtime_error("zero table: entry " + std::to_string(i + 1) +
                                     " is not ascending (or not above 14)");
        prev = ordinates_[i];
    }
    if (std::abs(ordinates_.front() - kFirstOrdinate) > kFirstOrdinateTol)
        throw std::runtime_error("zero table: first ordinate is not 14.1347 +- 1e-3");
}

std::size_t ZeroTable::count_below(double T) const {
    if (!(T > 0)) throw std::invalid_argument("count_below: T must be positive");
    if (T > max_ordinate())
        throw std::out_of_range("count_below: T beyond table coverage");
    auto it = std::lower_bound(ordinates_.begin(), ordinates_.end(), T);
    return static_cast<std::size_t>(it - ordinates_.begin());
}

ZeroTable load_zeros(const std::string& path, std::optional<std::size_t> limit) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_zeros: cannot open " + path);

    std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    char digest_hex[32];
    std::snprintf(digest_hex, sizeof digest_hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a(raw)));

    std::vector<double> ords;
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin <= raw.size()) {
        std::size_t end = raw.find('\n', begin);
        if (end == std::string::npos) end = raw.size();
        std::string line = raw.substr(begin, end - begin);
        begin = end + 1;
        ++line_no;
        if (end == raw.size() && line.empty()) break;

        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        char* parse_end = nullptr;
        const double v = std::strtod(line.c_str(), &parse_end);
        if (parse_end != line.c_str() + line.size() || !std::isfinite(v))
            throw std::runtime_error("load_zeros: parse failure at line " + std::to_string(line_no));
        if (!ords.empty() && v <= ords.back())
            throw std::runtime_error("load_zeros: monotonicity violation at line " +
                                     std::to_string(line_no));
        ords.push_back(v);
        if (limit && ords.size() >= *limit) break;
    }
    if (ords.empty()) throw std::runtime_error("load_zeros: empty table");
    return ZeroTable(std::move(ords), digest_hex);
}

double nt_bound(double T) {
    if (!(T > 15)) throw std::domain_error("nt_bound: stated only for T > 15");
    return T * std::log(T) / (2.0 * std::numbers::pi);
}

double tail_gamma_sq_bound(double T) {
    if (!(T > 15)) throw std::domain_error("tail_gamma_sq_bound: stated only for T > 15");
    return std::log(T) / (2.0 * std::numbers::pi * T);
}

InvRhoSqSum sum_inv_rho_sq(const ZeroTable& table) {
    const auto& g = table.ordinates();
    InvRhoSqSum out;
    out.partial = chunked_sum(g.size(), [&](std::size_t i) {
        return 2.0 / (0.25 + g[i] * g[i]);
    });
    // Beyond the table: 2/(1/4+g^2) < 2/g^2, so twice the gamma^-2 tail bound.
    const double T = std::max(table.max_ordinate(), 15.000001);
    out.tail_bound = 2.0 * tail_gamma_sq_bound(T);
    return out;
}

}  // namespace primegap
