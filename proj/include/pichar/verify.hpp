#pragma once

#include <string>
#include <vector>

namespace pichar::verify {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first counterexample on failure, summary on success
};

/// Names accepted by run_suite, in canonical order.
std::vector<std::string> suite_names();

/// Runs one suite. max_n <= 0 keeps the suite's default range; jobs <= 1 runs
/// single-threaded. Results are deterministic for any worker count.
SuiteResult run_suite(const std::string& name, int max_n = 0, int jobs = 1);

/// Runs "all" or a single named suite.
std::vector<SuiteResult> run(const std::string& name, int max_n = 0, int jobs = 1);

}  // namespace pichar::verify
