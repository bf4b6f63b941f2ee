// Acceptance suite: runs the bundled reproduction criteria at reference
// scale and prints one pass/fail line per criterion. Exit code is the number
// of failed criteria.
//
// Usage: acceptance [zeros_path] [gap_scan_max] [cramer_scan_max]
// Defaults: the in-repo 10^4-zero table and the 1e7 reference scales.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>

#include "primegap/report.hpp"

int main(int argc, char** argv) {
    primegap::ReproductionConfig cfg;
    cfg.zeros_path = PRIMEGAP_ZEROS_10K;
    if (const char* env = std::getenv("PRIMEGAP_ZERO_TABLE")) cfg.zeros_path = env;
    if (argc > 1) cfg.zeros_path = argv[1];
    if (argc > 2) cfg.gap_scan_max = std::strtoull(argv[2], nullptr, 10);
    if (argc > 3) cfg.cramer_scan_max = std::strtoull(argv[3], nullptr, 10);
    cfg.threads = 2;

    try {
        const auto results = primegap::run_reproduction(cfg);
        int failed = 0;
        for (const auto& r : results) {
            std::puts(primegap::format_criterion_line(r).c_str());
            if (!r.pass) ++failed;
        }
        std::printf("%zu criteria, %d failed\n", results.size(), failed);
        return failed;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance setup failed: %s\n", e.what());
        return 99;
    }
}
