#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tracerec {

struct SuiteReport {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    /// Largest absolute deviation from the oracle (0 for exact suites that pass).
    double max_deviation = 0.0;
    std::string detail;
};

/// binomial, posterior, infiltration, equivalence.
std::vector<std::string> verify_suites();

/// Runs one oracle-equivalence suite on seeded random instances.
/// Throws InvalidArgument for an unknown suite name.
SuiteReport run_suite(std::string_view name, std::uint64_t seed = 2024);

} // namespace tracerec
