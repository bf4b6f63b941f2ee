// The bundled reproduction suite: every verification the toolkit makes about
// the source results, with thresholds pinned here. The acceptance test binary
// and the CLI `report` command both run exactly this list.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace primegap {

struct ReproductionConfig {
    std::string zeros_path;
    unsigned threads = 1;
    // Scale knobs. Defaults are the reference scales; smaller values are for
    // smoke runs only and are reported in the criterion detail text.
    std::uint64_t gap_scan_max = 10'000'000;     // criterion 2
    std::uint64_t cramer_scan_max = 10'000'000;  // criterion 9
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Runs all criteria in order. Throws only on setup problems (missing table,
// sieve budget); check failures are reported as pass = false.
std::vector<CriterionResult> run_reproduction(const ReproductionConfig& config);

std::string format_criterion_line(const CriterionResult& r);

}  // namespace primegap
