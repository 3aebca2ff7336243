#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypela {

// One identity or cross-check evaluated on a sample set. A NaN error counts as a failure.
struct Check {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    int samples = 0;
    bool passed() const { return max_error <= tolerance; }
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0.0;
    bool passed() const;
};

// special-functions, fundamental-system, oracle, closed-curves, dirichlet.
const std::vector<std::string>& verification_suite_names();

// Runs one suite, or every suite for "all". Throws domain_error for unknown names.
std::vector<SuiteReport> run_verification(const std::string& suite, std::uint64_t seed = 20240611,
                                          unsigned threads = 0);

SuiteReport verify_special_functions(std::uint64_t seed);
SuiteReport verify_fundamental_system(std::uint64_t seed);
SuiteReport verify_oracle(std::uint64_t seed);
SuiteReport verify_closed_curves(unsigned threads);
SuiteReport verify_dirichlet(unsigned threads);

} // namespace hypela
