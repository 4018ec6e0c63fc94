#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bcjulia {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Names accepted by run_suite, in run order.
const std::vector<std::string>& suite_names();

/// Runs one randomized invariant suite. Throws std::invalid_argument for an
/// unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int threads = 1);
std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int threads = 1);

}  // namespace bcjulia
